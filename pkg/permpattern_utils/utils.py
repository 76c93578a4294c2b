"""
Utility Functions and Classes

This module collects small pieces of code used throughout :py:mod:`permpattern_utils`:
logging setup, configuration loading, the enumeration cap, the integer
width guard, worker pools and the common exception base class.
"""

import logging
import os
import sys

from collections.abc import Sequence
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Union

import pkg_resources
import tqdm as _tqdm
import yaml
from jinja2 import Environment, PackageLoader
from jsonschema import validate
from colorlog import ColoredFormatter
from boltons.funcutils import FunctionBuilder


logger = logging.getLogger(__name__)


class PermPatternError(Exception):
    """Base class for errors raised on invalid input

    Carries the offending **item**. The message is formed from the
    class ``template`` filled with the remaining arguments.
    """
    template = "is invalid"
    level = logging.ERROR

    def __init__(self, item: Any, *params) -> None:
        super().__init__(item, *params)
        self.item = item
        self.params = params

    def log(self, uselogger=logger, level=None):
        """Print message using provided logging func"""
        if not level:
            level = self.level
        uselogger.log(level, "%s", str(self))

    def __str__(self):
        if self.params:
            return f"'{self.item}' " + self.template % tuple(self.params)
        return f"'{self.item}' " + self.template

    @property
    def name(self):
        """Name of class"""
        return self.__class__.__name__


class EnumerationCapExceeded(PermPatternError):
    """Raised if an exhaustive enumeration would exceed ``max_n``"""
    template = "exceeds the enumeration cap (%s > %s)"


class TqdmHandler(logging.StreamHandler):
    """Tqdm aware logging StreamHandler

    Passes all log writes through tqdm to allow progress bars and log
    messages to coexist without clobbering terminal
    """
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # initialise internal tqdm lock so that we can use tqdm.write
        _tqdm.tqdm(disable=True, total=0)

    def emit(self, record):
        _tqdm.tqdm.write(self.format(record), file=sys.stderr)


def tqdm(*args, **kwargs):
    """Wrapper around TQDM handling disable

    Progress bars are disabled if:

    - stderr is not a terminal
    - ``TERM`` is set to ``dumb``
    - ``CI`` is set to ``true``
    - the effective log level of the is lower than set via ``loglevel``

    Args:
      loglevel: logging loglevel (the number, so logging.INFO)
      logger: local logger (in case it has different effective log level)
    """
    term_ok = (sys.stderr.isatty()
               and os.environ.get("TERM", "") != "dumb"
               and os.environ.get("CI", "") != "true")
    loglevel_ok = (kwargs.pop('logger', logger).getEffectiveLevel()
                   <= kwargs.pop('loglevel', logging.INFO))
    kwargs['disable'] = not (term_ok and loglevel_ok)
    return _tqdm.tqdm(*args, **kwargs)


def ensure_list(obj):
    """Wraps **obj** in a list if necessary

    >>> ensure_list("a-bc")
    ["a-bc"]
    >>> ensure_list(["a-bc", "ab-c"])
    ["a-bc", "ab-c"]
    """
    if obj is None:
        return []
    if isinstance(obj, Sequence) and not isinstance(obj, str):
        return obj
    return [obj]


def wraps(func):
    """Custom wraps() function for decorators

    This one differs from functiools.wraps and boltons.funcutils.wraps in
    that it allows *adding* keyword arguments to the function signature.

    >>> def decorator(func):
    >>>   @wraps(func)
    >>>   def wrapper(*args, extra_param=None, **kwargs):
    >>>      print("Called with extra_param=%s" % extra_param)
    >>>      return func(*args, **kwargs)
    >>>   return wrapper
    """

    fb = FunctionBuilder.from_func(func)

    def wrapper_wrapper(wrapper_func):
        fb_wrapper = FunctionBuilder.from_func(wrapper_func)
        fb.kwonlyargs += fb_wrapper.kwonlyargs
        fb.kwonlydefaults.update(fb_wrapper.kwonlydefaults)
        fb.body = 'return _call(%s)' % fb.get_invocation_str()
        execdict = dict(_call=wrapper_func, _func=func)
        fully_wrapped = fb.get_func(execdict)
        fully_wrapped.__wrapped__ = func
        return fully_wrapped

    return wrapper_wrapper


class LoggingSourceRenameFilter:
    """Logging filter for abbreviating module name in logs

    Maps ``permpattern_utils`` to ``PERMPAT`` and for everything else
    to just the top level package uppercased.
    """
    def filter(self, record: logging.LogRecord) -> bool:
        if record.name.startswith("permpattern_utils"):
            record.name = "PERMPAT"
        else:
            record.name = record.name.split('.')[0].upper()
        return True


def setup_logger(name: str = 'permpattern_utils', loglevel: Union[str, int] = logging.INFO,
                 logfile: str = None, logfile_level: Union[str, int] = logging.DEBUG,
                 prefix: str = "PERMPAT ",
                 msgfmt: str = ("%(asctime)s "
                                "%(log_color)s%(name)s %(levelname)s%(reset)s "
                                "%(message)s"),
                 datefmt: str = "%H:%M:%S") -> logging.Logger:
    """Set up logging for permpattern-utils

    Args:
      name: Module name for which to get a logger (``__name__``)
      loglevel: Log level, can be name or int level
      logfile: File to log to as well
      logfile_level: Log level for file logging
      prefix: Prefix to add to our log messages
      msgfmt: Format for messages
      datefmt: Format for dates

    Returns:
      A new logger
    """
    new_logger = logging.getLogger(name)
    root_logger = logging.getLogger()

    if logfile:
        if isinstance(logfile_level, str):
            logfile_level = getattr(logging, logfile_level.upper())
        log_file_handler = logging.FileHandler(logfile)
        log_file_handler.setLevel(logfile_level)
        log_file_formatter = logging.Formatter(
            msgfmt.replace("%(log_color)s", "").replace("%(reset)s", "").format(prefix=prefix),
            datefmt=None,
        )
        log_file_handler.setFormatter(log_file_formatter)
        root_logger.addHandler(log_file_handler)
    else:
        logfile_level = logging.FATAL

    if isinstance(loglevel, str):
        loglevel = getattr(logging, loglevel.upper())

    # Base logger is set to the lowest of console or file logging
    root_logger.setLevel(min(loglevel, logfile_level))

    # Console logging is passed through TqdmHandler so that the progress bar does not
    # get broken by log lines emitted.
    log_stream_handler = TqdmHandler()
    if loglevel:
        log_stream_handler.setLevel(loglevel)

    log_stream_handler.setFormatter(ColoredFormatter(
        msgfmt.format(prefix=prefix),
        datefmt=datefmt,
        reset=True,
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red',
        }))
    log_stream_handler.addFilter(LoggingSourceRenameFilter())
    root_logger.addHandler(log_stream_handler)

    return new_logger


jinja = Environment(
    loader=PackageLoader('permpattern_utils', 'templates'),
    trim_blocks=True,
    lstrip_blocks=True
)


#: Default values for all configuration keys
DEFAULT_CONFIG = {
    'max_n': 12,
    'int_width': None,
    'threads': 1,
    'formula_n_max': 20,
}

_max_n = DEFAULT_CONFIG['max_n']
_int_width: Optional[int] = DEFAULT_CONFIG['int_width']
_max_threads = DEFAULT_CONFIG['threads']
_formula_n_max = DEFAULT_CONFIG['formula_n_max']


def set_max_n(n: int) -> None:
    """Sets the size cap applied to exhaustive enumerations"""
    global _max_n
    _max_n = int(n)


def get_max_n() -> int:
    return _max_n


def check_cap(n: int, what: str = "enumeration") -> None:
    """Raises `EnumerationCapExceeded` if **n** is above the configured cap"""
    if n > _max_n:
        raise EnumerationCapExceeded(what, n, _max_n)


def set_int_width(width: Optional[int]) -> None:
    """Sets the signed integer width checked by the numbers module

    ``None`` disables the check (unbounded exact integers).
    """
    global _int_width
    _int_width = None if width is None else int(width)


def get_int_width() -> Optional[int]:
    return _int_width


def set_formula_n_max(n: int) -> None:
    global _formula_n_max
    _formula_n_max = int(n)


def get_formula_n_max() -> int:
    return _formula_n_max


def set_max_threads(n):
    global _max_threads
    _max_threads = int(n)


def threads_to_use():
    """Returns the number of cores we are allowed to run on"""
    if hasattr(os, 'sched_getaffinity'):
        cores = len(os.sched_getaffinity(0))
    else:
        cores = os.cpu_count()
    return max(1, min(_max_threads, cores))


def current_config() -> Dict[str, Any]:
    """Returns the settings currently in effect as config dict"""
    return {
        'max_n': _max_n,
        'int_width': _int_width,
        'threads': _max_threads,
        'formula_n_max': _formula_n_max,
    }


def _init_worker(config: Dict[str, Any]) -> None:
    apply_config(config)


def parallel_map(func: Callable, items: Iterable, desc: str) -> Iterator:
    """Applies **func** to **items** in worker processes

    Results are yielded in input order. Settings from `current_config`
    are shipped to the workers. With a single thread, runs inline.
    """
    items = list(items)
    threads = threads_to_use()
    if threads == 1 or len(items) < 2:
        yield from tqdm((func(item) for item in items), desc=desc, total=len(items))
        return
    with Pool(threads, initializer=_init_worker, initargs=(current_config(),)) as pool:
        yield from tqdm(pool.imap(func, items), desc=desc, total=len(items))


def validate_config(config):
    """
    Validate config against schema

    Parameters
    ----------
    config : str or dict
        If str, assume it's a path to YAML file and load it. If dict, use it
        directly.
    """
    if not isinstance(config, dict):
        with open(config, encoding='utf8') as fdes:
            config = yaml.safe_load(fdes) or {}
    fn = pkg_resources.resource_filename(
        'permpattern_utils', 'config.schema.yaml'
    )
    with open(fn, encoding='utf8') as fdes:
        schema = yaml.safe_load(fdes)
    validate(config, schema)


def load_config(path) -> Dict[str, Any]:
    """
    Parses config file, filling in defaults

    Parameters
    ----------
    path : str or dict
        Path to YAML config file, or an already parsed config
    """
    validate_config(path)

    if isinstance(path, dict):
        config = dict(path)
    else:
        with open(path, encoding='utf8') as fdes:
            config = yaml.safe_load(fdes) or {}

    default_config = dict(DEFAULT_CONFIG)
    default_config.update(config)
    return default_config


def apply_config(config: Dict[str, Any]) -> None:
    """Makes the values of a loaded config the active settings"""
    set_max_n(config.get('max_n', DEFAULT_CONFIG['max_n']))
    set_int_width(config.get('int_width', DEFAULT_CONFIG['int_width']))
    set_max_threads(config.get('threads', DEFAULT_CONFIG['threads']))
    set_formula_n_max(config.get('formula_n_max', DEFAULT_CONFIG['formula_n_max']))
    logger.debug("Active settings: %s", current_config())


def ellipsize(items: List[str], n: int = 5) -> str:
    """Logging helper showing the first **n** of a list

    Returns:
      A string like "123, 132, 213, ..." or ""
    """
    if not items:
        return ""
    if len(items) > n:
        return ', '.join(items[:n]) + ", ..."
    return ', '.join(items)
