"""Claim Verification Harness

Every statement the package implements is re-proved here by exhaustive
computation for all sizes up to a bound.

Writing additional claims
~~~~~~~~~~~~~~~~~~~~~~~~~

Claims are subclasses of `Claim` living in the ``check_*`` modules of
this package. They are picked up automatically by `get_claims`.

- The class attribute ``claim_id`` names the claim on the command line
  and in reports (e.g. ``prop.bell1``). Classes without ``claim_id`` are
  not registered and may serve as shared bases.

- The docstring's first line is the title shown in reports.

- ``group`` collects claims run together by the ``verify_*`` functions.

- ``requires`` lists ids of claims that must have passed. If one of them
  failed, the claim is reported as ``skip``.

- ``n_min`` and ``n_limit`` bound the sizes tried. Claims with
  ``formula_only`` set do no enumeration and run up to the configured
  ``formula_n_max`` instead of the requested bound. Claims with
  ``cumulative`` set are called once with the upper bound.

- `Claim.check` is called for each size in turn and reports a
  counterexample with `Claim.fail`. Checking stops at the first size
  that failed.


Module Autodocs
~~~~~~~~~~~~~~~

.. autosummary::
   :toctree:

   check_table
   check_distributions
   check_bijections
   check_polynomials
   check_classes

"""

import abc
import fnmatch
import importlib
import logging
import pkgutil
import time

from enum import Enum
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from .. import utils


logger = logging.getLogger(__name__)


class Status(Enum):
    """Outcome of a claim"""
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


PASS = Status.PASS
FAIL = Status.FAIL
SKIP = Status.SKIP


class UnknownClaim(utils.PermPatternError):
    """Raised if a claim filter matches nothing"""
    template = "matches no claim"


class ClaimResult(NamedTuple):
    """Result of verifying one claim"""

    #: Claim identifier, e.g. ``prop.bell1``
    claim_id: str

    #: One line description
    title: str

    #: First and last size tried; empty if nothing ran
    n_range: Tuple[int, ...]

    #: Outcome
    status: Status

    #: Counterexample or reason, always set unless passed
    witness: Optional[str] = None

    #: Seconds spent
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sizes(self) -> str:
        if not self.n_range:
            return "-"
        if self.n_range[0] == self.n_range[-1]:
            return f"n={self.n_range[0]}"
        return f"n={self.n_range[0]}..{self.n_range[-1]}"

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            'claim_id': self.claim_id,
            'title': self.title,
            'n_range': list(self.n_range),
            'status': self.status.value,
            'witness': self.witness,
        }
        if timings:
            data['elapsed'] = round(self.elapsed, 3)
        return data


class ClaimMeta(abc.ABCMeta):
    """Meta class for claims

    Handles registry
    """

    registry: Dict[str, "Claim"] = {}

    def __new__(cls, name: str, bases: Tuple[type, ...],
                namespace: Dict[str, Any], **kwargs) -> type:
        """Creates Claim classes"""
        typ = super().__new__(cls, name, bases, namespace, **kwargs)
        claim_id = namespace.get('claim_id')
        if claim_id:
            if claim_id in cls.registry:
                raise RuntimeError(f"Duplicate claim id {claim_id}")
            cls.registry[claim_id] = typ
        return typ

    def __str__(cls):
        return getattr(cls, 'claim_id', None) or cls.__name__


_claims_loaded = False
def get_claims() -> Dict[str, "Claim"]:
    """Loads and returns the available claims by id"""
    global _claims_loaded
    if not _claims_loaded:
        for _loader, name, _ispkg in pkgutil.iter_modules(__path__):
            if name.startswith('check_'):
                importlib.import_module(__name__ + '.' + name)
        _claims_loaded = True
    return ClaimMeta.registry


class Claim(metaclass=ClaimMeta):
    """Base class for claims"""

    #: Identifier; only classes setting this are registered
    claim_id: str = ""

    #: Group used by the ``verify_*`` functions
    group: str = ""

    #: Ids of claims that must have passed first
    requires: List[str] = []

    #: Smallest size checked
    n_min: int = 0

    #: Largest size checked unless a start size is requested
    n_limit: Optional[int] = None

    #: Runs up to ``formula_n_max`` without enumerating
    formula_only: bool = False

    #: Check is called once with the upper bound
    cumulative: bool = False

    def __init__(self) -> None:
        #: First counterexample found
        self.witness: Optional[str] = None

    def __str__(self):
        return self.claim_id

    @classmethod
    def title(cls) -> str:
        doc = cls.__doc__ or ""
        return doc.strip().splitlines()[0] if doc.strip() else cls.claim_id

    def sizes(self, n_max: int, n_min: Optional[int] = None) -> range:
        """Sizes tried for a requested bound"""
        low = self.n_min if n_min is None else max(n_min, self.n_min)
        high = utils.get_formula_n_max() if self.formula_only else n_max
        if self.n_limit is not None and n_min is None:
            high = min(high, self.n_limit)
        return range(low, high + 1)

    def check(self, n: int) -> None:
        """Checks the claim for size **n**

        Override in subclasses, calling `fail` with a counterexample.
        """

    def fail(self, witness: str) -> None:
        """Records a counterexample; the first one is kept"""
        if self.witness is None:
            self.witness = witness

    def expect(self, got: Any, want: Any, what: str) -> bool:
        """Records a failure unless **got** equals **want**"""
        if got != want:
            if isinstance(got, (set, frozenset)) and isinstance(want, (set, frozenset)):
                missing = utils.ellipsize(sorted(str(item) for item in want - got))
                extra = utils.ellipsize(sorted(str(item) for item in got - want))
                self.fail(f"{what}: missing [{missing}], unexpected [{extra}]")
            else:
                self.fail(f"{what}: got {got}, expected {want}")
            return False
        return True

    def run(self, n_max: int, n_min: Optional[int] = None) -> ClaimResult:
        """Checks all sizes and returns the result"""
        self.witness = None
        sizes = self.sizes(n_max, n_min)
        start = time.monotonic()
        tried: List[int] = []
        try:
            if self.cumulative:
                if sizes:
                    tried = [sizes[0], sizes[-1]]
                    self.check(sizes[-1])
            else:
                for n in sizes:
                    tried = [tried[0] if tried else n, n]
                    logger.debug("Checking %s at n=%s", self.claim_id, n)
                    self.check(n)
                    if self.witness is not None:
                        break
        except utils.PermPatternError as exc:
            self.fail(str(exc))
        except Exception as exc:  # pylint: disable=broad-except
            logger.exception("Unexpected exception in claim %s", self.claim_id)
            self.fail(f"raised {exc.__class__.__name__}: {exc}")
        elapsed = time.monotonic() - start

        status = PASS if self.witness is None else FAIL
        result = ClaimResult(self.claim_id, self.title(), tuple(tried), status,
                             self.witness, elapsed)
        if status == PASS:
            logger.info("%s passed (%s)", self.claim_id, result.sizes())
        else:
            logger.error("%s failed: %s", self.claim_id, self.witness)
        return result


def select_claims(claim_filter: Optional[Iterable[str]] = None) -> List[str]:
    """Returns sorted ids of claims matching any entry of **claim_filter**

    An entry matches a claim by id, by group or as glob pattern on the id
    (``table.*``). No filter selects everything.
    """
    claims = get_claims()
    filters = utils.ensure_list(claim_filter)
    if not filters:
        return sorted(claims)
    selected = set()
    for entry in filters:
        matched = {claim_id for claim_id, claim in claims.items()
                   if claim_id == entry or claim.group == entry
                   or fnmatch.fnmatchcase(claim_id, entry)}
        if not matched:
            raise UnknownClaim(entry)
        selected.update(matched)
    return sorted(selected)


def _run_claim(job: Tuple[str, int, Optional[int]]) -> ClaimResult:
    claim_id, n_max, n_min = job
    return get_claims()[claim_id]().run(n_max, n_min)


class Verifier:
    """Claim executor

    Arguments:
      claim_filter: ids, groups or globs selecting the claims to run
      n_max: largest size checked by enumerating claims
      n_min: smallest size checked (defaults to each claim's own)
    """
    def __init__(self, claim_filter: Optional[Iterable[str]] = None,
                 n_max: int = 8, n_min: Optional[int] = None) -> None:
        self.claims = get_claims()
        self.selected = select_claims(claim_filter)
        self.n_max = n_max
        self.n_min = n_min

        dag = nx.DiGraph()
        dag.add_nodes_from(self.selected)
        dag.add_edges_from(
            (claim_id, required)
            for claim_id in self.selected
            for required in self.claims[claim_id].requires
            if required in self.selected
        )
        unknown = [required for claim in self.claims.values()
                   for required in claim.requires if required not in self.claims]
        if unknown:
            raise RuntimeError(f"Claims require unknown claims {unknown}")
        if not nx.is_directed_acyclic_graph(dag):
            raise RuntimeError("Cycle in claim requirements!")
        self.claims_dag = dag

    def requirements(self, claim_id: str) -> List[str]:
        """Selected claims that must pass before **claim_id** runs"""
        return sorted(required for required in self.claims_dag.successors(claim_id))

    def run(self) -> List[ClaimResult]:
        """Runs the selected claims

        Claims run in waves of those whose requirements are done. Each
        wave is spread over the worker pool.

        Returns:
          Results ordered by claim id
        """
        if any(not self.claims[claim_id].formula_only for claim_id in self.selected):
            utils.check_cap(self.n_max, "verification bound")
        done: Dict[str, ClaimResult] = {}
        pending = set(self.selected)
        while pending:
            ready = sorted(claim_id for claim_id in pending
                           if all(req in done for req in self.requirements(claim_id)))
            jobs = []
            for claim_id in ready:
                failed = [req for req in self.requirements(claim_id) if not done[req].passed]
                if failed:
                    logger.warning("Skipping %s because %s did not pass", claim_id, failed[0])
                    done[claim_id] = ClaimResult(
                        claim_id, self.claims[claim_id].title(), (), SKIP,
                        f"requires {failed[0]} ({done[failed[0]].status.value})")
                else:
                    jobs.append((claim_id, self.n_max, self.n_min))
            for result in utils.parallel_map(_run_claim, jobs, desc="Verifying"):
                done[result.claim_id] = result
            pending.difference_update(ready)
        return [done[claim_id] for claim_id in sorted(done)]


def all_passed(results: Iterable[ClaimResult]) -> bool:
    return all(result.passed for result in results)


def render_report(results: List[ClaimResult], n_max: int) -> str:
    """Formats results as plain text report"""
    template = utils.jinja.get_template('report.txt')
    counts = {status.value: sum(1 for result in results if result.status == status)
              for status in Status}
    return template.render(results=results, n_max=n_max, counts=counts,
                           passed=all_passed(results))


def verify(claim_filter: Optional[Iterable[str]] = None, n_max: int = 8,
           n_min: Optional[int] = None) -> List[ClaimResult]:
    """Runs the claims selected by **claim_filter**"""
    return Verifier(claim_filter, n_max, n_min).run()


def verify_main_table(n_max: int) -> List[ClaimResult]:
    """Cardinalities of the six avoidance classes"""
    return verify(['main-table'], n_max)


def verify_distributions(n_max: int) -> List[ClaimResult]:
    """Statistic distributions over avoidance classes"""
    return verify(['distributions'], n_max)


def verify_bijections(n_max: int) -> List[ClaimResult]:
    return verify(['bijections'], n_max)


def verify_polynomials(n_max: int) -> List[ClaimResult]:
    return verify(['polynomials'], n_max)


def verify_classes(n: int) -> ClaimResult:
    """Equidistribution classes of the one-dash patterns at size **n**"""
    return verify(['prop.classes'], n, n_min=n)[0]


def verify_lemma2(n_max: int) -> ClaimResult:
    return verify(['lemma2'], n_max)[0]
