#!/usr/bin/env python3
"""
Verification Suites - Run the check families and collect pass/fail rows.

Families:
    relations     c_i c_j = q c_j c_i, c_i^N = 1, trivial center
    intertwiners  master/adjoint intertwiners, neutral commutation, charge transport
    unitarity     b_kl b_lk = 1 (direct and certificate), distant commutation
    ybe           braid relation (direct and certificate), Gauss-sum diagnostics
    moves         twist, slide, slip, chain identities, nonlocal entangler
    states        closed-form chain states and their projections
    oracle        matrix representation axioms and random cross-validation

Every row names its parameters so a failure is reproducible. Rows are sorted
by (family, check, params) whatever order the workers finish in.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from config import get_config
from errors import GCAError, PreconditionError, RepBudgetError
from braids.checks import (
    check_adjoint_intertwiner,
    check_charge_transport,
    check_distant_commutation,
    check_master_intertwiner,
    check_neutral_commutation,
    check_unitarity,
    check_unitarity_certificate,
    check_yang_baxter,
    yang_baxter_certificate,
)
from braids.word import BraidWord
from clifford.center import center_basis
from clifford.element import Element
from clifford.monomial import identity_monomial
from clifford.relations import check_commutation, check_generator_order
from oracle.representation import build_rep, verify_rep
from oracle.validation import check_faithfulness, cross_validate, cross_validate_word
from scalars.context import ScalarContext
from scalars.gauss import gauss_diagnostics
from states.closed_forms import (
    check_chain_projections,
    check_closed_form_chain,
    check_two_qudit_forms,
    closed_form_chain,
    closed_form_chain_odd,
)
from states.moves import (
    check_chain_identities,
    check_general_slide_corollary,
    check_nonlocal_entangler,
    check_slide,
    check_slip,
    check_twist,
)
from states.state import State, states_equal

logger = logging.getLogger(__name__)

FAMILIES = ("relations", "intertwiners", "unitarity", "ybe", "moves", "states", "oracle")
SUITES = FAMILIES + ("all",)

# monomial matrices are dim x dim; keep the rank test to desk-sized Gram matrices
FAITHFULNESS_MAX_MONOMIALS = 1024


@dataclass(frozen=True)
class CheckResult:
    """One verified instance."""
    family: str
    check: str
    params: Tuple[int, ...]
    passed: bool
    skipped: bool = False
    detail: str = ""

    @property
    def key(self) -> Tuple:
        return (FAMILIES.index(self.family), self.check, self.params)

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict:
        data = {"family": self.family, "check": self.check, "params": list(self.params), "status": self.status}
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class SuiteReport:
    """All rows of one verify run."""
    N: int
    n: int
    backend: str
    suite: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed and not r.skipped]

    @property
    def passed(self) -> bool:
        return not self.failures

    def tally(self) -> List[Dict]:
        rows = []
        for family in FAMILIES:
            members = [r for r in self.results if r.family == family]
            if members:
                rows.append({
                    "family": family,
                    "total": len(members),
                    "passed": sum(1 for r in members if r.passed and not r.skipped),
                    "failed": sum(1 for r in members if not r.passed and not r.skipped),
                    "skipped": sum(1 for r in members if r.skipped),
                })
        return rows

    def to_dict(self) -> Dict:
        return {
            "N": self.N,
            "n": self.n,
            "backend": self.backend,
            "suite": self.suite,
            "passed": self.passed,
            "tally": self.tally(),
            "results": [r.to_dict() for r in self.results],
        }


# A task computes one row: (family, check, params, thunk returning bool or CheckResult)
Task = Tuple[str, str, Tuple[int, ...], Callable[[], object]]


def _run_task(task: Task) -> CheckResult:
    family, check, params, thunk = task
    try:
        outcome = thunk()
    except GCAError as e:
        logger.debug(f"{family}/{check}{params} raised {e.kind}: {e.message}")
        return CheckResult(family, check, params, passed=False, detail=f"{e.kind}: {e.message}")
    if isinstance(outcome, CheckResult):
        return outcome
    logger.debug(f"{family}/{check}{params}: {'pass' if outcome else 'fail'}")
    return CheckResult(family, check, params, passed=bool(outcome))


# =============================================================================
# FAMILIES
# =============================================================================

def relations_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    tasks: List[Task] = []
    for i, j in combinations(range(1, 2 * n + 1), 2):
        tasks.append(("relations", "commutation", (i, j), lambda i=i, j=j: check_commutation(ctx, n, i, j)))
    for i in range(1, 2 * n + 1):
        tasks.append(("relations", "generator_order", (i,), lambda i=i: check_generator_order(ctx, n, i)))
    tasks.append(("relations", "trivial_center", (),
                  lambda: center_basis(ctx.N, n) == [identity_monomial(n)]))
    return tasks


def _outer_index(k: int, l: int, n: int) -> Optional[int]:
    if k > 1:
        return k - 1
    if l < 2 * n:
        return l + 1
    return None


def intertwiner_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    N = ctx.N
    tasks: List[Task] = []
    for k, l in combinations(range(1, 2 * n + 1), 2):
        for a in range(N):
            for b in range(N):
                params = (k, l, a, b)
                tasks.append(("intertwiners", "master", params,
                              lambda k=k, l=l, a=a, b=b: check_master_intertwiner(ctx, n, k, l, a, b)))
                tasks.append(("intertwiners", "adjoint", params,
                              lambda k=k, l=l, a=a, b=b: check_adjoint_intertwiner(ctx, n, k, l, a, b)))
                tasks.append(("intertwiners", "neutral_commutation", params,
                              lambda k=k, l=l, a=a, b=b: check_neutral_commutation(
                                  ctx, n, k, l, a, b, _outer_index(k, l, n))))
        tasks.append(("intertwiners", "charge_transport", (k, l),
                      lambda k=k, l=l: check_charge_transport(ctx, n, k, l)))
    return tasks


def unitarity_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    indices = range(1, 2 * n + 1)
    tasks: List[Task] = []
    for k in indices:
        for l in indices:
            if k != l:
                tasks.append(("unitarity", "direct", (k, l), lambda k=k, l=l: check_unitarity(ctx, n, k, l)))
    for k, l in combinations(indices, 2):
        tasks.append(("unitarity", "certificate", (k, l),
                      lambda k=k, l=l: check_unitarity_certificate(ctx, n, k, l)))
    for i, j, k, l in combinations(indices, 4):
        # disjoint (i,j)(k,l) and nested (i,l)(j,k)
        tasks.append(("unitarity", "distant_commutation", (i, j, k, l),
                      lambda i=i, j=j, k=k, l=l: check_distant_commutation(ctx, n, i, j, k, l)))
        tasks.append(("unitarity", "distant_commutation", (i, l, j, k),
                      lambda i=i, j=j, k=k, l=l: check_distant_commutation(ctx, n, i, l, j, k)))
    return tasks


def _gauss_row(N: int) -> CheckResult:
    report = gauss_diagnostics(N)
    expected_a = N % 4 == 2
    expected_b = N % 4 == 0
    hansen_ok = max(report.hansen_residuals) < 1e-9
    passed = report.vanishes_a == expected_a and report.vanishes_b == expected_b and hansen_ok
    detail = f"vanishes_a={report.vanishes_a} vanishes_b={report.vanishes_b}"
    return CheckResult("ybe", "gauss_sums", (N,), passed=passed, detail=detail)


def ybe_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    tasks: List[Task] = []
    for i, j, k in combinations(range(1, 2 * n + 1), 3):
        tasks.append(("ybe", "direct", (i, j, k), lambda i=i, j=j, k=k: check_yang_baxter(ctx, n, i, j, k)))
        tasks.append(("ybe", "certificate", (i, j, k),
                      lambda i=i, j=j, k=k: yang_baxter_certificate(ctx, n, i, j, k).passed))
    tasks.append(("ybe", "gauss_sums", (ctx.N,), lambda: _gauss_row(ctx.N)))
    return tasks


def moves_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    tasks: List[Task] = []
    for k in range(1, n + 1):
        tasks.append(("moves", "twist", (k,), lambda k=k: check_twist(ctx, n, k)))
        tasks.append(("moves", "twist_adjoint", (k,), lambda k=k: check_twist(ctx, n, k, adjoint=True)))
    for k, l in combinations(range(1, n + 1), 2):
        tasks.append(("moves", "slide", (k, l), lambda k=k, l=l: check_slide(ctx, n, k, l)))
        tasks.append(("moves", "slip", (k, l), lambda k=k, l=l: check_slip(ctx, n, k, l)))
        tasks.append(("moves", "slide_corollary", (k, l),
                      lambda k=k, l=l: check_general_slide_corollary(ctx, n, k, l)))
    if n >= 2:
        tasks.append(("moves", "chain_identities", (), lambda: check_chain_identities(ctx, n).passed))
        tasks.append(("moves", "nonlocal_entangler", (), lambda: check_nonlocal_entangler(ctx, n)))
    return tasks


def states_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    tasks: List[Task] = []
    for k in range(1, n + 1):
        tasks.append(("states", "closed_form_chain", (k,), lambda k=k: check_closed_form_chain(ctx, n, k)))
        tasks.append(("states", "odd_generator_form", (k,),
                      lambda k=k: states_equal(closed_form_chain(k, ctx, n), closed_form_chain_odd(k, ctx, n))))
        tasks.append(("states", "chain_projections", (k,), lambda k=k: check_chain_projections(ctx, n, k)))
    if n >= 2:
        tasks.append(("states", "two_qudit_forms", (), lambda: check_two_qudit_forms(ctx, n)))
    return tasks


# =============================================================================
# ORACLE
# =============================================================================

def random_word(rng: np.random.Generator, n: int, max_length: int = 6) -> BraidWord:
    """Uniform length in 0..max_length, uniform ordered pairs k != l."""
    factors = []
    for _ in range(int(rng.integers(0, max_length + 1))):
        k, l = (int(v) + 1 for v in rng.choice(2 * n, size=2, replace=False))
        factors.append((k, l))
    return BraidWord(tuple(factors))


def random_element(rng: np.random.Generator, ctx: ScalarContext, n: int, max_terms: int = 20) -> Element:
    """Up to max_terms monomials with small rational multiples of roots of unity."""
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        r = tuple(int(v) for v in rng.integers(0, ctx.N, size=2 * n))
        scalar = ctx.scalar(Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4))))
        terms[r] = scalar.mul_root(int(rng.integers(0, ctx.M)))
    return Element(ctx, n, terms)


def random_state(rng: np.random.Generator, ctx: ScalarContext, n: int, max_terms: int = 4) -> State:
    coeffs = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        a = tuple(int(v) for v in rng.integers(0, ctx.N, size=n))
        coeffs[a] = ctx.one().mul_root(int(rng.integers(0, ctx.M)))
    return State(ctx, n, coeffs)


def oracle_tasks(ctx: ScalarContext, n: int) -> List[Task]:
    config = get_config()
    dim = ctx.N ** n
    if dim > config.rep.max_dim:
        detail = f"dimension {dim} exceeds max_dim {config.rep.max_dim}"
        return [("oracle", "build", (), lambda: CheckResult("oracle", "build", (), passed=True, skipped=True,
                                                            detail=detail))]
    try:
        rc = build_rep(ctx, n)
    except RepBudgetError as e:
        message = e.message
        return [("oracle", "build", (), lambda: CheckResult("oracle", "build", (), passed=True, skipped=True,
                                                            detail=message))]

    tasks: List[Task] = [("oracle", "build", (), lambda: not verify_rep(rc))]
    if ctx.N ** (2 * n) <= FAITHFULNESS_MAX_MONOMIALS:
        tasks.append(("oracle", "faithfulness", (), lambda: check_faithfulness(rc)))

    # drawn up front so the sample does not depend on worker scheduling
    rng = np.random.default_rng(config.verify.seed)
    tol = config.rep.oracle_tolerance
    for index in range(config.verify.random_words):
        word, state = random_word(rng, n), random_state(rng, ctx, n)
        tasks.append(("oracle", "random_word", (index,),
                      lambda word=word, state=state: cross_validate_word(word, state, rc, tol).passed))
    for index in range(config.verify.random_elements):
        element, state = random_element(rng, ctx, n), random_state(rng, ctx, n)
        tasks.append(("oracle", "random_element", (index,),
                      lambda element=element, state=state: cross_validate(element, state, rc, tol).passed))
    return tasks


FAMILY_TASKS = {
    "relations": relations_tasks,
    "intertwiners": intertwiner_tasks,
    "unitarity": unitarity_tasks,
    "ybe": ybe_tasks,
    "moves": moves_tasks,
    "states": states_tasks,
    "oracle": oracle_tasks,
}


def run_suite(ctx: ScalarContext, n: int, suite: str = "all", workers: Optional[int] = None) -> SuiteReport:
    """
    Run one family (or all of them) for a fixed (N, n).

    Args:
        ctx: Scalar context
        n: Number of qudits
        suite: Family name or 'all'
        workers: Thread count (configuration default when omitted)

    Returns:
        SuiteReport with rows sorted by (family, check, params)
    """
    if suite not in SUITES:
        raise PreconditionError(f"unknown suite '{suite}' (choose from {', '.join(SUITES)})")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    workers = workers or get_config().verify.workers
    families = FAMILIES if suite == "all" else (suite,)

    report = SuiteReport(N=ctx.N, n=n, backend=ctx.backend, suite=suite)
    for family in families:
        tasks = FAMILY_TASKS[family](ctx, n)
        logger.info(f"Running {family}: {len(tasks)} checks (N={ctx.N}, n={n}, workers={workers})")
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(_run_task, tasks))
        else:
            rows = [_run_task(task) for task in tasks]
        failed = sum(1 for r in rows if not r.passed and not r.skipped)
        logger.info(f"{family}: {len(rows) - failed}/{len(rows)} passed")
        report.results.extend(rows)

    report.results.sort(key=lambda r: r.key)
    return report
