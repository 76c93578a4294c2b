"""
Permutation Pattern Utils Command Line Interface

"""

import sys
import json
import logging
from typing import Any, Dict, List, NamedTuple, Optional

import argh
from argh import arg, named
from jsonschema import ValidationError
import pandas

from . import __version__ as VERSION
from . import utils
from . import harness
from . import numbers
from .bijections import BIJECTIONS, to_json
from .core import Permutation
from . import patterns as _patterns
from .patterns import as_pattern, avoiders, occurrences

logger = logging.getLogger(__name__)

#: Output formats accepted by ``--format``
FORMATS = ['text', 'json', 'csv']


class OutputEnvelope(NamedTuple):
    """Result of a command in all output formats"""

    #: Selected format
    format: str

    #: JSON document
    payload: Any

    #: CSV rows
    rows: List[Dict[str, Any]]

    #: Plain text view
    text: str

    #: CSV header, taken from the rows if not given
    columns: Optional[List[str]] = None

    def render(self) -> str:
        if self.format == 'json':
            return json.dumps(self.payload, indent=2)
        if self.format == 'csv':
            return pandas.DataFrame(self.rows, columns=self.columns).to_csv(index=False)
        return self.text

    def emit(self) -> None:
        out = self.render()
        sys.stdout.write(out if out.endswith('\n') else out + '\n')


def enable_logging(default_loglevel='info', default_file_loglevel='debug'):
    """Adds the parameter ``--loglevel`` and sets up logging

    Args:
      default_loglevel: loglevel used when --loglevel is not passed
    """
    def decorator(func):
        @arg('--loglevel', help="Set logging level (debug, info, warning, error, critical)")
        @arg('--logfile', help="Write log to file")
        @arg('--logfile-level', help="Log level for log file")
        @utils.wraps(func)
        def wrapper(*args, loglevel=default_loglevel, logfile=None,
                    logfile_level=default_file_loglevel, **kwargs):
            utils.setup_logger('permpattern_utils', loglevel, logfile, logfile_level)
            func(*args, **kwargs)
        return wrapper
    return decorator


def enable_debugging():
    """Adds the paremeter ``--pdb`` (or ``-P``) to enable dropping into PDB

    Invalid input ends the program with a one line message.
    """
    def decorator(func):
        @arg('-P', '--pdb', help="Drop into debugger on exception")
        @utils.wraps(func)
        def wrapper(*args, pdb=False, **kwargs):
            try:
                func(*args, **kwargs)
            except (utils.PermPatternError, ValueError, ValidationError) as exc:
                if pdb:
                    import pdb
                    pdb.post_mortem()
                message = exc.message if isinstance(exc, ValidationError) else str(exc)
                sys.exit(f"Error: {message}")
            except Exception:
                logger.exception("Dropping into debugger")
                if pdb:
                    import pdb
                    pdb.post_mortem()
                else:
                    raise
        return wrapper
    return decorator


def enable_threads():
    """Adds the parameter ``--threads`` (or ``-t``) to limit parallelism"""
    def decorator(func):
        @arg('-t', '--threads', type=int, help="Limit maximum number of processes used.")
        @utils.wraps(func)
        def wrapper(*args, threads=None, **kwargs):
            if threads is not None:
                utils.set_max_threads(threads)
            func(*args, **kwargs)
        return wrapper
    return decorator


def enable_config():
    """Adds the parameters ``--config`` and ``--max-n``

    The config file is loaded and applied first; ``--max-n`` overrides
    the cap it sets.
    """
    def decorator(func):
        @arg('--config', help="YAML configuration file (see example_config.yaml)")
        @arg('--max-n', type=int, help="Largest size enumerated exhaustively (default 12)")
        @utils.wraps(func)
        def wrapper(*args, config=None, max_n=None, **kwargs):
            settings = utils.load_config(config) if config else dict(utils.DEFAULT_CONFIG)
            utils.apply_config(settings)
            if max_n is not None:
                utils.set_max_n(max_n)
            func(*args, **kwargs)
        return wrapper
    return decorator


@arg('pattern', help="Pattern such as a-bc")
@arg('perm', help="Permutation such as 491273865 or 10,13,11,9,...")
@arg('--positions', action='store_true', help="Also list the positions of each occurrence")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging('warning')
@enable_debugging()
@enable_config()
@named('count')
def cmd_count(pattern, perm, positions=False, format='text'):
    """
    Count occurrences of a pattern in a permutation
    """
    host = Permutation.parse(perm)
    pattern = as_pattern(pattern)
    if positions:
        found = occurrences(pattern, host)
        payload = dict(found.to_dict(), perm=str(host))
        rows = [{'occurrence': num, 'positions': ' '.join(map(str, occ)),
                 'letters': ' '.join(map(str, letters))}
                for num, (occ, letters) in enumerate(zip(found.positions, found.values()), 1)]
        lines = [str(found.count)] + [
            f"{' '.join(map(str, occ))}  ({' '.join(map(str, letters))})"
            for occ, letters in zip(found.positions, found.values())]
        envelope = OutputEnvelope(format, payload, rows, '\n'.join(lines),
                                  ['occurrence', 'positions', 'letters'])
    else:
        num = _patterns.count(pattern, host)
        payload = {'pattern': str(pattern), 'perm': str(host), 'count': num}
        envelope = OutputEnvelope(format, payload, [payload], str(num))
    envelope.emit()


@arg('-p', '--patterns', action='append', help="Pattern to avoid. Can be repeated.")
@arg('-n', '--n', type=int, required=True, help="Size of the permutations")
@arg('--count', action='store_true', help="Print the number of avoiders")
@arg('--list', action='store_true', help="Print the avoiders")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging('warning')
@enable_debugging()
@enable_config()
@named('avoiders')
def cmd_avoiders(n=None, patterns=None, count=False, list=False, format='text'):  # pylint: disable=redefined-builtin
    """
    Count or list the permutations of [n] avoiding all given patterns

    Without patterns, all permutations are counted. Permutations are listed
    in lexicographic order.
    """
    patterns = [str(as_pattern(pattern)) for pattern in utils.ensure_list(patterns)]
    if count and list:
        logger.warning("Both --count and --list given; listing")
    found = avoiders(patterns, n)
    if list:
        perms = [str(perm) for perm in found]
        payload = {'patterns': patterns, 'n': n, 'count': len(perms), 'avoiders': perms}
        rows = [{'permutation': perm} for perm in perms]
        envelope = OutputEnvelope(format, payload, rows, '\n'.join(perms), ['permutation'])
    else:
        num = sum(1 for _ in found)
        logger.info("S_%s(%s) has %s elements", n, ', '.join(patterns), num)
        payload = {'patterns': patterns, 'n': n, 'count': num}
        rows = [{'patterns': ' '.join(patterns), 'n': n, 'count': num}]
        envelope = OutputEnvelope(format, payload, rows, str(num))
    envelope.emit()


@arg('name', choices=sorted(BIJECTIONS), help="Map to apply")
@arg('value', help="Input: permutation, partition (1,3,5/2,6,9/...) or path word")
@arg('--inverse', action='store_true', help="Apply the inverse map")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging('warning')
@enable_debugging()
@enable_config()
@named('biject')
def cmd_biject(name, value, inverse=False, format='text'):
    """
    Apply one of the bijections or its inverse
    """
    bijection = BIJECTIONS[name]
    image = bijection.apply(value, inverse=inverse)
    payload = {
        'map': name,
        'direction': 'inverse' if inverse else 'forward',
        'input': value,
        'output': to_json(image),
        'text': str(image),
    }
    rows = [{'map': name, 'direction': payload['direction'], 'input': value, 'output': str(image)}]
    OutputEnvelope(format, payload, rows, str(image)).emit()


@arg('name', help="bell, catalan, motzkin, involutions, bessel, stirling2, s-star, "
                  "ballot or involutions-by-fixed")
@arg('n_max', type=int, help="Largest index")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging('warning')
@enable_debugging()
@enable_config()
@named('sequence')
def cmd_sequence(name, n_max, format='text'):
    """
    Print a counting sequence or number triangle for n = 0..n_max
    """
    table = numbers.sequence(name, n_max)
    if table.triangle is None:
        text = ','.join(str(value) for value in table.values)
    else:
        lines = []
        for n in range(n_max + 1):
            row = [str(value) for (row_n, _), value in sorted(table.triangle.items())
                   if row_n == n]
            lines.append(f"{n}: {' '.join(row)}")
        text = '\n'.join(lines)
    OutputEnvelope(format, table.to_dict(), table.rows(), text).emit()


@arg('family', choices=sorted(numbers.POLYNOMIAL_FAMILIES), help="Polynomial family")
@arg('n', type=int, help="Index of the polynomial")
@arg('--method', help="eulerian-avoid: enumerate, recurrence, explicit, involution; "
                      "bessel: explicit, recurrence, involution")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging('warning')
@enable_debugging()
@enable_config()
@named('poly')
def cmd_poly(family, n, method='recurrence', format='text'):
    """
    Print A_n(x) (eulerian-avoid) or the Bessel polynomial y_n(x)
    """
    poly = numbers.polynomial(family, n, method)
    payload = {
        'family': family,
        'n': n,
        'method': method,
        'coefficients': poly.to_list(),
        'text': str(poly),
    }
    rows = [{'degree': degree, 'coefficient': coeff}
            for degree, coeff in enumerate(poly.coefficients)]
    OutputEnvelope(format, payload, rows, str(poly), ['degree', 'coefficient']).emit()


@arg('--claim', action='append', help="Claim id, group or glob (e.g. 'table.*'). Can be repeated.")
@arg('--n', type=int, help="Largest size for enumerating claims")
@arg('--list-claims', action='store_true', help="List the claims and exit")
@arg('--timings', action='store_true', help="Include run times in JSON and CSV output")
@arg('--format', choices=FORMATS, help="Output format")
@enable_logging()
@enable_debugging()
@enable_config()
@enable_threads()
@named('verify')
def cmd_verify(claim=None, n=8, list_claims=False, timings=False, format='text'):
    """
    Verify claims by exhaustive computation

    Exits with status 1 if any selected claim fails.
    """
    if list_claims:
        claims = harness.get_claims()
        for claim_id in harness.select_claims(claim):
            print(f"{claim_id:26} {claims[claim_id].group:14} {claims[claim_id].title()}")
        sys.exit(0)

    results = harness.verify(claim, n)
    passed = harness.all_passed(results)
    payload = {
        'n_max': n,
        'passed': passed,
        'results': [result.to_dict(timings) for result in results],
    }
    rows = [dict(result.to_dict(timings), n_range=result.sizes()) for result in results]
    OutputEnvelope(format, payload, rows, harness.render_report(results, n)).emit()
    if not passed:
        sys.exit(1)


def main():
    if '--version' in sys.argv:
        print("This is permpattern-utils version", VERSION)
        sys.exit(0)
    argh.dispatch_commands([
        cmd_count, cmd_avoiders, cmd_biject, cmd_sequence, cmd_poly, cmd_verify
    ])
