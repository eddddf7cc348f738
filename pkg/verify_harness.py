"""
Exhaustive Verification Harness
Re-proves every theorem by brute force over S_n for small n
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import comb
import json
import time
from typing import Any, Callable, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from errors import ParameterRangeError, UnknownCheckError
from hc_classification import (
    canonical_elements, cell_size, classify, count_identity_check, decreasing_representative,
    enumerate_Wpq, inverse_canonical_mate, neg_rho_closed_form, rank_m, rank_m_bruteforce,
    valid_triples,
)
from logs import logger, log_exceptions, performance_tracker
from permutations import (
    PATTERN_3412, PATTERN_4231, Perm, all_perms, compose, contains_pattern,
    contains_pattern_naive, find_smooth_obstruction, inverse, is_good_full, longest_element,
    parse_perm, render_perm,
)
from rsk import cell_members_of, cell_relation, insertion_tableau, inverse_rs, robinson_schensted
from schubert_cert import Verdict, certify, is_schubert_smooth, validate_certificate
from tableaux import (
    hook_lengths, partitions, syt_count, syt_enumerate, two_column_hook_multiset,
    two_column_shape,
)
from weights import (
    Weight, act, highest_weight_of, is_integral, is_pq_dominant, neg_w_rho, neg_w_rho_rows,
    pq_dominant_mask,
)
import config


# ============================================
# REPORT TYPES
# ============================================

@dataclass
class CheckResult:
    name: str
    n: int
    cases: int
    failures: int
    elapsed: float
    first_failure: Optional[str] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "name": self.name, "n": self.n, "cases": self.cases, "failures": self.failures,
            "elapsed": round(self.elapsed, 6), "first_failure": self.first_failure,
            "detail": self.detail,
        }


@dataclass
class Report:
    n_max: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    def to_frame(self) -> pd.DataFrame:
        rows = [{
            "check": c.name,
            "n": c.n,
            "cases": c.cases,
            "failures": c.failures,
            "elapsed_s": round(c.elapsed, 3),
            "note": c.first_failure or c.detail or "",
        } for c in self.checks]
        return pd.DataFrame(rows, columns=["check", "n", "cases", "failures", "elapsed_s", "note"])

    def to_text(self) -> str:
        table = self.to_frame().to_string(index=False)
        status = "PASS" if self.passed else "FAIL"
        failed = sum(1 for c in self.checks if not c.passed)
        return f"{table}\n\n{status}: {len(self.checks)} check runs, {failed} failing (n_max={self.n_max})"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


@dataclass(frozen=True)
class CheckSpec:
    """
    One named check: cases(n) lists the inputs, predicate(case) must hold for
    each, describe(case) is the replayable reproducer of a failing case
    """
    name: str
    cases: Callable[[int], Iterable[Any]]
    predicate: Callable[[Any], bool]
    describe: Callable[[Any], str]
    n_limit: Optional[int] = None
    fixed_range: bool = False      # run 2..n_limit whatever n_max is
    summarize: Optional[Callable[[int, Sequence[Any]], str]] = None

    def n_values(self, n_max: int) -> range:
        if self.fixed_range:
            return range(config.VERIFY_MIN_N, self.n_limit + 1)
        upper = n_max if self.n_limit is None else min(n_max, self.n_limit)
        return range(config.VERIFY_MIN_N, upper + 1)


# ============================================
# CASE GENERATORS
# ============================================

def _sn(n):
    return all_perms(n)


def _wpq_cases(n):
    for p in range(1, n):
        for w in enumerate_Wpq(p, n - p, bound=n):
            yield p, n - p, w


def _triples(n):
    return valid_triples(n)


def _splits_at_least_two(n):
    return [(p, n - p) for p in range(2, n - 1)]


def _converse_cases(n):
    for p, q, m in valid_triples(n):
        w_pqm, _ = canonical_elements(p, q, m)
        for u in cell_members_of(insertion_tableau(w_pqm)):
            yield p, q, m, u


def _pattern_cases(n):
    small = [Perm(images) for images in _itertools_permutations((1, 2, 3))]
    patterns = small + [PATTERN_3412, PATTERN_4231]
    for w in all_perms(n):
        for pat in patterns:
            yield w, pat


def _action_cases(n):
    """Every u against a fixed generating set: s_1, s_{n-1}, w0 and the long cycle"""
    generators = []
    for i in (1, n - 1):
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        generators.append(Perm(tuple(images)))
    generators.append(longest_element(n))
    generators.append(Perm(tuple(range(2, n + 1)) + (1,)))
    for u in all_perms(n):
        for v in generators:
            yield u, v


def _replay(command, w):
    return f"w={render_perm(w)} (replay: python cli.py {command} {render_perm(w)})"


# ============================================
# PREDICATES
# ============================================

def _rs_roundtrip(w):
    pair = robinson_schensted(w)
    return inverse_rs(pair.P, pair.Q) == w


def _q_is_p_of_inverse(w):
    return robinson_schensted(w).Q == insertion_tableau(inverse(w))


@lru_cache(maxsize=config.CELL_CACHE_SIZE)
def _cell_is_consistent(P):
    members = cell_members_of(P)
    return (len(members) == syt_count(P.shape)
            and len(set(members)) == len(members)
            and all(insertion_tableau(u) == P for u in members))


def _cells_partition(w):
    P = insertion_tableau(w)
    return _cell_is_consistent(P) and w in cell_members_of(P)


def _hook_vs_enumeration(shape):
    return len(syt_enumerate(shape, bound=shape.size)) == syt_count(shape)


def _m_of(p, q, w):
    return rank_m(neg_w_rho(w), p, q)


def _wpq_in_canonical_cell(case):
    p, q, w = case
    w_pqm, _ = canonical_elements(p, q, _m_of(p, q, w))
    return cell_relation(w, w_pqm).same_right


def _canonical_cell_in_wpq(case):
    p, q, _, u = case
    return is_pq_dominant(neg_w_rho(u), p, q)


def _sigma_agreement(case):
    w_pqm, sigma = canonical_elements(*case)
    return cell_relation(sigma, w_pqm).same_right


def _z_equals_wpqm(case):
    p, q, w = case
    w_pqm, _ = canonical_elements(p, q, _m_of(p, q, w))
    return decreasing_representative(w) == w_pqm


def _m_via_shape(case):
    p, q, w = case
    return _m_of(p, q, w) == insertion_tableau(w).shape.column_length(2)


def _rank_m_oracle(case):
    p, q, w = case
    t = neg_w_rho(w)
    return rank_m(t, p, q) == rank_m_bruteforce(t, p, q)


def _neg_rho_closed_form(case):
    w_pqm, _ = canonical_elements(*case)
    return neg_w_rho(w_pqm) == neg_rho_closed_form(*case)


def _cell_size_triangle(case):
    p, q, m = case
    n = p + q
    w_pqm, _ = canonical_elements(p, q, m)
    cell = cell_members_of(insertion_tableau(w_pqm))
    return cell_size(n, m) == len(cell) == syt_count(two_column_shape(n, m))


def _count_identity(case):
    p, q = case
    n = p + q
    report = count_identity_check(n, p, q)
    if not report.holds:
        return False
    if n <= config.ENUMERATION_MAX_N:
        return len(enumerate_Wpq(p, q, bound=n)) == report.rhs
    return True


def _summarize_count_identity(n, cases):
    parts = []
    for p, q in cases:
        report = count_identity_check(n, p, q)
        parts.append(f"({p},{q}) {report.lhs}={report.rhs}")
    return "; ".join(parts)


def _carrell_symmetry(w):
    return is_schubert_smooth(w)[0] == is_schubert_smooth(inverse(w))[0]


def _good_full_avoids(w):
    return is_good_full(w) is None or find_smooth_obstruction(w) is None


@lru_cache(maxsize=config.RS_CACHE_SIZE)
def _certificate(w):
    return certify(w)


def _certify_soundness(w):
    cert = _certificate(w)
    if not validate_certificate(w, cert):
        return False
    if cert.verdict is Verdict.HC_MODULE:
        return cert.witness == classify(w).signatures[0].orbit
    return True


def _summarize_coverage(n, cases):
    certified = sum(1 for w in cases if _certificate(w).certified)
    total = len(cases)
    return f"certified {certified}/{total} ({100.0 * certified / total:.1f}%)"


def _perm_text_roundtrip(w):
    text = render_perm(w)
    ok = parse_perm(text) == w and inverse(inverse(w)) == w
    if w.n <= config.COMPACT_PERM_MAX_N:
        ok = ok and parse_perm(text.replace(",", "")) == w
    return ok


def _pattern_oracle(case):
    w, pat = case
    return contains_pattern(w, pat) == contains_pattern_naive(w, pat)


def _group_action(case):
    u, v = case
    lam = Weight(tuple(k * k for k in range(1, u.n + 1)))
    return act(u, act(v, lam)) == act(compose(u, v), lam)


def _integral_highest_weight(w):
    return is_integral(highest_weight_of(w))


def _wpq_census(case):
    p, q = case
    n = p + q
    listed = enumerate_Wpq(p, q, bound=n)
    images = np.array(list(_itertools_permutations(range(1, n + 1))), dtype=np.int64)
    dominant = images[pq_dominant_mask(neg_w_rho_rows(images), p, q)]
    filtered = {Perm(tuple(int(x) for x in row)) for row in dominant}
    return len(listed) == comb(n, p) and set(listed) == filtered


def _splits(n):
    return [(p, n - p) for p in range(1, n)]


def _m_uniqueness(case):
    p, q = case
    tableaux = {insertion_tableau(canonical_elements(p, q, m)[0]) for m in range(min(p, q) + 1)}
    return len(tableaux) == min(p, q) + 1


def _wpqm_good_full(case):
    p, q, m = case
    w_pqm, _ = canonical_elements(p, q, m)
    return is_good_full(w_pqm) == (p + q - m, m)


def _good_full_shape(w):
    size = is_good_full(w)
    if size is None or size[0] < size[1]:
        return True
    return insertion_tableau(w).shape == two_column_shape(w.n, size[1])


def _two_column_hooks(m_and_n):
    n, m = m_and_n
    hooks = hook_lengths(two_column_shape(n, m))
    first = tuple(row[0] for row in hooks)
    second = tuple(row[1] for row in hooks if len(row) > 1)
    return (first, second) == two_column_hook_multiset(n, m)


def _inverse_cell_agreement(case):
    p, q, m = case
    w_pqm, _ = canonical_elements(p, q, m)
    return cell_relation(inverse(w_pqm), inverse_canonical_mate(p + q, m)).same_right


# ============================================
# CHECK REGISTRY (report order)
# ============================================

CHECKS = [
    CheckSpec("rs_roundtrip", _sn, _rs_roundtrip, lambda w: _replay("rs", w)),
    CheckSpec("q_is_p_of_inverse", _sn, _q_is_p_of_inverse, lambda w: _replay("rs", w)),
    CheckSpec("cells_partition", _sn, _cells_partition, lambda w: _replay("cells", w)),
    CheckSpec("hook_vs_enumeration", partitions, _hook_vs_enumeration,
              lambda s: f"shape={s} (replay: python cli.py syt --shape {','.join(map(str, s.rows))} --enumerate)",
              n_limit=config.HOOK_CHECK_MAX_N, fixed_range=True),
    CheckSpec("thm_1_1_forward", _wpq_cases, _wpq_in_canonical_cell,
              lambda c: f"p={c[0]} q={c[1]} " + _replay("classify", c[2])),
    CheckSpec("thm_1_1_converse", _converse_cases, _canonical_cell_in_wpq,
              lambda c: f"p={c[0]} q={c[1]} m={c[2]} " + _replay("classify", c[3])),
    CheckSpec("sigma_cell_agreement", _triples, _sigma_agreement,
              lambda c: "p={} q={} m={} (replay: python cli.py canonical --p {} --q {} --m {})".format(*c, *c),
              n_limit=config.CELL_CHECK_MAX_N, fixed_range=True),
    CheckSpec("z_equals_wpqm", _wpq_cases, _z_equals_wpqm,
              lambda c: f"p={c[0]} q={c[1]} " + _replay("rs", c[2])),
    CheckSpec("m_via_shape", _wpq_cases, _m_via_shape,
              lambda c: f"p={c[0]} q={c[1]} " + _replay("classify", c[2])),
    CheckSpec("rank_m_oracle", _wpq_cases, _rank_m_oracle,
              lambda c: f"p={c[0]} q={c[1]} " + _replay("classify", c[2])),
    CheckSpec("neg_rho_closed_form", _triples, _neg_rho_closed_form,
              lambda c: "p={} q={} m={}".format(*c),
              n_limit=config.WEIGHT_FORMULA_MAX_N, fixed_range=True),
    CheckSpec("cell_size_triangle", _triples, _cell_size_triangle,
              lambda c: "p={} q={} m={} (replay: python cli.py count --n {} --p {} --q {})".format(
                  *c, c[0] + c[1], c[0], c[1]),
              n_limit=config.CELL_CHECK_MAX_N, fixed_range=True),
    CheckSpec("cor_1_3_identity", _splits_at_least_two, _count_identity,
              lambda c: "p={} q={} (replay: python cli.py count --n {} --p {} --q {})".format(
                  c[0], c[1], c[0] + c[1], c[0], c[1]),
              n_limit=config.FORMULA_CHECK_MAX_N, fixed_range=True, summarize=_summarize_count_identity),
    CheckSpec("carrell_pattern_symmetry", _sn, _carrell_symmetry, lambda w: _replay("smooth", w)),
    CheckSpec("good_full_avoids", _sn, _good_full_avoids, lambda w: _replay("smooth", w)),
    CheckSpec("certify_soundness", _sn, _certify_soundness, lambda w: _replay("certify", w)),
    CheckSpec("certification_coverage", _sn, lambda w: True, lambda w: _replay("certify", w),
              summarize=_summarize_coverage),
    CheckSpec("perm_text_roundtrip", _sn, _perm_text_roundtrip, lambda w: f"w={render_perm(w)}"),
    CheckSpec("pattern_oracle", _pattern_cases, _pattern_oracle,
              lambda c: f"w={render_perm(c[0])} pattern={render_perm(c[1])}",
              n_limit=config.PATTERN_ORACLE_MAX_N, fixed_range=True),
    CheckSpec("act_group_action", _action_cases, _group_action,
              lambda c: f"u={render_perm(c[0])} v={render_perm(c[1])}",
              n_limit=config.GROUP_ACTION_MAX_N),
    CheckSpec("integral_highest_weight", _sn, _integral_highest_weight,
              lambda w: _replay("classify", w)),
    CheckSpec("wpq_census", _splits, _wpq_census, lambda c: "p={} q={}".format(*c),
              n_limit=config.WPQ_CENSUS_MAX_N),
    CheckSpec("m_uniqueness", _splits, _m_uniqueness, lambda c: "p={} q={}".format(*c),
              n_limit=config.CELL_CHECK_MAX_N, fixed_range=True),
    CheckSpec("wpqm_good_full", _triples, _wpqm_good_full,
              lambda c: "p={} q={} m={}".format(*c),
              n_limit=config.CELL_CHECK_MAX_N, fixed_range=True),
    CheckSpec("good_full_shape", _sn, _good_full_shape, lambda w: _replay("rs", w)),
    CheckSpec("two_column_hooks", lambda n: [(n, m) for m in range(n // 2 + 1)], _two_column_hooks,
              lambda c: "n={} m={}".format(*c),
              n_limit=config.FORMULA_CHECK_MAX_N, fixed_range=True),
    CheckSpec("inverse_cell_agreement", _triples, _inverse_cell_agreement,
              lambda c: "p={} q={} m={} (replay: python cli.py canonical --p {} --q {} --m {})".format(*c, *c),
              n_limit=config.CELL_CHECK_MAX_N, fixed_range=True),
]

CHECK_NAMES = [spec.name for spec in CHECKS]


# ============================================
# RUNNER
# ============================================

class VerificationSuite:
    def __init__(self, max_workers=None, chunk_size=None):
        """Initialize the check registry and worker pool settings"""
        self.checks = {spec.name: spec for spec in CHECKS}
        self.max_workers = max_workers or config.MAX_WORKERS
        self.chunk_size = chunk_size or config.CHUNK_SIZE

        logger.info(f"Verification suite initialized with {len(self.checks)} checks")

    def _run_chunk(self, spec, offset, chunk):
        """(failures, index of first failure, its reproducer) for one slice"""
        failures = 0
        first = None
        for index, case in enumerate(chunk, start=offset):
            try:
                ok = spec.predicate(case)
            except Exception as e:
                ok = False
                reason = f"{type(e).__name__}: {e}"
            else:
                reason = None
            if not ok:
                failures += 1
                if first is None:
                    message = spec.describe(case)
                    first = (index, f"{message} [{reason}]" if reason else message)
        return failures, first

    def run_check(self, spec: CheckSpec, n: int) -> CheckResult:
        """Run one check at one n; slices run in parallel, results merge in order"""
        start_time = time.perf_counter()
        cases = list(spec.cases(n))
        chunks = [(i, cases[i:i + self.chunk_size]) for i in range(0, len(cases), self.chunk_size)]

        if len(chunks) > 1 and self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                outcomes = list(executor.map(lambda c: self._run_chunk(spec, *c), chunks))
        else:
            outcomes = [self._run_chunk(spec, *c) for c in chunks]

        failures = sum(f for f, _ in outcomes)
        firsts = [first for _, first in outcomes if first is not None]
        first_failure = min(firsts)[1] if firsts else None

        detail = None
        if spec.summarize and cases:
            try:
                detail = spec.summarize(n, cases)
            except Exception as e:
                failures += 1
                detail = f"summary failed [{type(e).__name__}: {e}]"
                if first_failure is None:
                    first_failure = detail

        duration = time.perf_counter() - start_time
        performance_tracker.record_check(spec.name, len(cases), failures, duration)

        if failures:
            logger.warning(f"❌ {spec.name} n={n}: {failures}/{len(cases)} failed; first: {first_failure}")
        else:
            logger.debug(f"✅ {spec.name} n={n}: {len(cases)} cases in {duration:.3f}s")

        return CheckResult(spec.name, n, len(cases), failures, duration, first_failure, detail)

    @log_exceptions
    def run_suite(self, n_max: int = None, checks: Optional[Sequence[str]] = None) -> Report:
        """
        Run the named checks (all by default) for every n in range

        Raises:
            ParameterRangeError if n_max is outside VERIFY_MIN_N..VERIFY_MAX_N
            UnknownCheckError for a name not in the registry
        """
        if n_max is None:
            n_max = config.VERIFY_DEFAULT_N
        if not config.VERIFY_MIN_N <= n_max <= config.VERIFY_MAX_N:
            raise ParameterRangeError(
                f"n_max={n_max} outside {config.VERIFY_MIN_N}..{config.VERIFY_MAX_N}")

        selected = list(checks) if checks else CHECK_NAMES
        unknown = [name for name in selected if name not in self.checks]
        if unknown:
            raise UnknownCheckError(f"unknown check(s): {', '.join(unknown)}; "
                                    f"known: {', '.join(CHECK_NAMES)}")

        report = Report(n_max)
        logger.info(f"🔍 Verifying {len(selected)} checks up to n={n_max}...")

        # registry order, whatever order the names were given in
        for name in CHECK_NAMES:
            if name not in selected:
                continue
            spec = self.checks[name]
            for n in spec.n_values(n_max):
                result = self.run_check(spec, n)
                if result.cases:
                    report.checks.append(result)

        self._print_summary(report)
        return report

    def _print_summary(self, report):
        """Log totals like the per-scan summary"""
        stats = performance_tracker.get_stats()
        logger.info("=" * 50)
        logger.info("📊 VERIFICATION SUMMARY:")
        logger.info(f"Check runs: {len(report.checks)}")
        logger.info(f"Cases: {sum(c.cases for c in report.checks)}")
        logger.info(f"Failures: {sum(c.failures for c in report.checks)}")
        logger.info(f"Slowest check so far: {stats['slowest_check']}")
        logger.info(f"Result: {'PASS' if report.passed else 'FAIL'}")
        logger.info("=" * 50)


def run_suite(n_max: int = None, checks: Optional[Sequence[str]] = None) -> Report:
    return VerificationSuite().run_suite(n_max, checks)


if __name__ == "__main__":
    print(run_suite().to_text())
