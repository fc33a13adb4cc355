"""Named reproductions and deterministic, resumable parameter sweeps.

The sweeps are evidence generators: they examine large families of
quotient and product specs, decide polynomiality by the cheap divisor
profile, expand only the polynomial cases, and record any positivity
violation in full.  Reports are deterministic for a fixed parameter set
and seed regardless of worker count, which makes them comparable across
machines and resumable from checkpoints.

Randomized sweeps draw every sample as a pure function of (seed, index)
through SHA-256, so sample i is the same on every platform, in every
process, on every run.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import multiprocessing
import os
import time

from .analysis import PropertyRecord, nonnegativity, property_record
from .criteria import (
    corollary10_expression,
    thm8_is_polynomial,
    thm9_is_polynomial,
)
from .qexpr import (
    FactoredQExpression,
    FakeGaussianSpec,
    QuotientSpec,
    expand,
    from_factorials,
    from_fake_gaussian,
    from_quotient_spec,
    is_polynomial,
)
from .qpoly import IntPolynomial, NotDivisible, poly_mul

__all__ = [
    "CheckResult",
    "SweepReport",
    "CheckpointMismatch",
    "CHECKPOINT_FORMAT",
    "REPORT_SCHEMA",
    "STANTON_SEQUENCE",
    "FAKE_GAUSSIAN_TEMPLATES",
    "REMARK25_EXPECTED",
    "verify_quotient",
    "verify_fake_gaussian",
    "sweep_conjecture1",
    "sweep_fake_gaussian",
    "crosscheck_theorems",
    "reproduce_remark25",
    "reproduce_stanton",
    "reproduce_corollary10",
    "canonical_json",
]

CHECKPOINT_FORMAT = "qpositivity-checkpoint/1"
REPORT_SCHEMA = "qpositivity-report/1"

VERDICT_NOT_POLYNOMIAL = "not-polynomial"
VERDICT_NONNEGATIVE = "polynomial-nonnegative"
VERDICT_VIOLATION = "VIOLATION"

#: The 17-term exponent sequence whose m=1 product is a polynomial with a
#: negative coefficient (at q^7), while m >= 2 appears uniformly positive.
STANTON_SEQUENCE = (1, 3, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1)

#: Recognized symmetric sequence shapes for randomized product sweeps.
FAKE_GAUSSIAN_TEMPLATES = ("a", "aa", "aba", "abcba")


class CheckpointMismatch(RuntimeError):
    """Raised when a checkpoint cannot be resumed against the given sweep."""


@dataclasses.dataclass
class CheckResult:
    """Outcome of verifying a single spec.

    verdict is VIOLATION exactly when the expression is a polynomial with
    some negative coefficient.  properties is attached on demand and
    always on violation.  note carries diagnostics for cross-check rows;
    expansion is kept only when explicitly requested.
    """

    spec: "QuotientSpec | FakeGaussianSpec"
    normalized_spec: "QuotientSpec | FakeGaussianSpec"
    is_polynomial: bool
    verdict: str
    properties: "PropertyRecord | None" = None
    elapsed: float = 0.0
    note: "str | None" = None
    expansion: "IntPolynomial | None" = None

    def to_dict(self, canonical: bool = False) -> dict:
        d = {
            "spec": _spec_to_dict(self.spec),
            "normalized_spec": _spec_to_dict(self.normalized_spec),
            "is_polynomial": self.is_polynomial,
            "verdict": self.verdict,
            "properties": _properties_to_dict(self.properties),
            "note": self.note,
            "expansion": list(self.expansion.coeffs) if self.expansion else None,
        }
        if not canonical:
            d["elapsed"] = self.elapsed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(
            spec=_spec_from_dict(d["spec"]),
            normalized_spec=_spec_from_dict(d["normalized_spec"]),
            is_polynomial=d["is_polynomial"],
            verdict=d["verdict"],
            properties=_properties_from_dict(d["properties"]),
            elapsed=d.get("elapsed", 0.0),
            note=d.get("note"),
            expansion=IntPolynomial(d["expansion"]) if d.get("expansion") else None,
        )


@dataclasses.dataclass
class SweepReport:
    """Aggregated outcome of one sweep or named reproduction.

    Deterministic for fixed parameters and seed regardless of worker
    count; wall_time is informational and excluded from the canonical
    serialized form.
    """

    sweep_id: str
    params: dict
    seed: "int | None"
    counts: dict
    violations: list
    cursor: int
    wall_time: float = 0.0

    def to_dict(self, canonical: bool = False) -> dict:
        d = {
            "schema": REPORT_SCHEMA,
            "sweep": self.sweep_id,
            "params": dict(self.params),
            "seed": self.seed,
            "counts": dict(self.counts),
            "violations": [v.to_dict(canonical=True) for v in self.violations],
            "cursor": self.cursor,
        }
        if not canonical:
            d["wall_time"] = self.wall_time
        return d


def canonical_json(payload: dict) -> str:
    """Stable, whitespace-free JSON used for determinism comparisons."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _spec_to_dict(spec) -> "dict | None":
    if spec is None:
        return None
    if isinstance(spec, QuotientSpec):
        return {"type": "quotient", "n": spec.n, "k": spec.k, "l": spec.l}
    if isinstance(spec, FakeGaussianSpec):
        return {
            "type": "fake-gaussian",
            "m": spec.m,
            "a": list(spec.a),
            "symmetric": spec.is_symmetric,
        }
    raise TypeError(f"unknown spec {spec!r}")


def _spec_from_dict(d: "dict | None"):
    if d is None:
        return None
    if d["type"] == "quotient":
        return QuotientSpec(d["n"], d["k"], d["l"])
    if d["type"] == "fake-gaussian":
        return FakeGaussianSpec(d["m"], tuple(d["a"]))
    raise ValueError(f"unknown spec type {d['type']!r}")


def _properties_to_dict(props: "PropertyRecord | None") -> "dict | None":
    if props is None:
        return None
    d = dataclasses.asdict(props)
    if d["first_negative"] is not None:
        d["first_negative"] = list(d["first_negative"])
    return d


def _properties_from_dict(d: "dict | None") -> "PropertyRecord | None":
    if d is None:
        return None
    d = dict(d)
    if d["first_negative"] is not None:
        d["first_negative"] = tuple(d["first_negative"])
    return PropertyRecord(**d)


def normalize_quotient_spec(spec: QuotientSpec) -> QuotientSpec:
    """Reduce a spec to the range 0 <= l <= k <= n/2.

    Both parameters are reflected into the lower half (the defining
    factorials are symmetric under k -> n-k and l -> n-l) and then
    ordered.  The ordering swap replaces the expression by its
    reciprocal; for l < k the original direction is never a polynomial,
    so verdicts are reported for the normalized triple.
    """
    n = spec.n
    k = min(spec.k, n - spec.k)
    l = min(spec.l, n - spec.l)
    if l > k:
        k, l = l, k
    return QuotientSpec(n, k, l)


def _verify_expression(
    spec,
    normalized_spec,
    expr: FactoredQExpression,
    properties: bool,
    keep_expansion: bool,
) -> CheckResult:
    started = time.perf_counter()
    poly = is_polynomial(expr)
    props = None
    expansion = None
    if not poly:
        verdict = VERDICT_NOT_POLYNOMIAL
    else:
        p = expand(expr)
        assert p is not NotDivisible, f"divisor profile and expansion disagree on {expr}"
        nonneg, _ = nonnegativity(p)
        verdict = VERDICT_NONNEGATIVE if nonneg else VERDICT_VIOLATION
        if properties or not nonneg:
            props = property_record(p)
        if keep_expansion:
            expansion = p
    return CheckResult(
        spec=spec,
        normalized_spec=normalized_spec,
        is_polynomial=poly,
        verdict=verdict,
        properties=props,
        elapsed=time.perf_counter() - started,
        expansion=expansion,
    )


def verify_quotient(
    spec: QuotientSpec, *, properties: bool = False, keep_expansion: bool = False
) -> CheckResult:
    """Check one factorial quotient for polynomiality and nonnegativity.

    The spec is normalized first; the cheap divisor-profile test decides
    polynomiality, and only polynomial cases are expanded.

    >>> verify_quotient(QuotientSpec(11, 3, 2), keep_expansion=True).expansion
    IntPolynomial(1 + q^3 + q^6)
    >>> verify_quotient(QuotientSpec(12, 2, 1)).verdict
    'not-polynomial'
    """
    if not (0 <= spec.k <= spec.n and 0 <= spec.l <= spec.n):
        raise ValueError(f"spec {spec} outside 0 <= k, l <= n")
    normalized = normalize_quotient_spec(spec)
    expr = from_quotient_spec(normalized)
    return _verify_expression(spec, normalized, expr, properties, keep_expansion)


def verify_fake_gaussian(
    spec: FakeGaussianSpec, *, properties: bool = False, keep_expansion: bool = False
) -> CheckResult:
    """Check one fake Gaussian product; no normalization applies.

    >>> r = verify_fake_gaussian(FakeGaussianSpec(1, STANTON_SEQUENCE))
    >>> r.verdict, r.properties.first_negative
    ('VIOLATION', (7, -1))
    """
    expr = from_fake_gaussian(spec)
    return _verify_expression(spec, spec, expr, properties, keep_expansion)


# ---------------------------------------------------------------------------
# sweep machinery


def _write_checkpoint(path: str, payload: dict) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def _load_checkpoint(path: str) -> "dict | None":
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CheckpointMismatch(f"checkpoint {path} is unreadable: {exc}") from exc
    return data


def _resume_state(path: "str | None", resume: bool, sweep_id: str, params: dict):
    """Cursor, counts, and violations restored from a checkpoint, or fresh."""
    counts = {"examined": 0, "polynomial": 0, "violations": 0}
    if not (path and resume):
        return 0, counts, []
    data = _load_checkpoint(path)
    if data is None:
        return 0, counts, []
    if data.get("format") != CHECKPOINT_FORMAT:
        raise CheckpointMismatch(
            f"checkpoint format {data.get('format')!r} is not {CHECKPOINT_FORMAT!r}"
        )
    if data.get("sweep") != sweep_id or data.get("params") != params:
        raise CheckpointMismatch(
            f"checkpoint was written by sweep {data.get('sweep')!r} with parameters "
            f"{data.get('params')!r}; refusing to resume {sweep_id!r} with {params!r}"
        )
    violations = [CheckResult.from_dict(v) for v in data["violations"]]
    return data["cursor"], dict(data["counts"]), violations


def _checkpoint_payload(sweep_id, params, cursor, counts, violations) -> dict:
    return {
        "format": CHECKPOINT_FORMAT,
        "sweep": sweep_id,
        "params": params,
        "cursor": cursor,
        "counts": dict(counts),
        "violations": [v.to_dict(canonical=True) for v in violations],
    }


def _execute_units(units, fn, workers: int):
    """Run fn over units, yielding results in submission order."""
    if workers <= 1 or len(units) <= 1:
        for unit in units:
            yield fn(unit)
        return
    with multiprocessing.Pool(processes=workers) as pool:
        yield from pool.imap(fn, units, chunksize=1)


def _polynomial_ls(n: int) -> "dict[int, frozenset[int]]":
    # For fixed n, floor(x/d) + floor((n-x)/d) equals floor(n/d) exactly when
    # x mod d <= n mod d, and is one less otherwise.  The quotient (n,k,l) is
    # a polynomial iff every d where k attains the maximum also has l
    # attaining it, i.e. table[k] <= table[l] as sets.
    return {
        x: frozenset(d for d in range(2, n + 1) if x % d <= n % d)
        for x in range(0, n // 2 + 1)
    }


def _structural_note(p: IntPolynomial) -> "str | None":
    # cheap invariants asserted across the sweep: constant term 1, palindrome
    if p.coefficient(0) != 1:
        return f"constant term {p.coefficient(0)} != 1"
    if p.coeffs != p.coeffs[::-1]:
        return "expansion is not reciprocal"
    return None


def _conjecture1_unit(n: int):
    """All triples 1 <= l < k <= n/2 for one n; the per-n work unit."""
    examined = 0
    polynomial = 0
    violations: list[CheckResult] = []
    table = _polynomial_ls(n)
    for k in range(2, n // 2 + 1):
        profile_k = table[k]
        for l in range(1, k):
            examined += 1
            if not profile_k <= table[l]:
                continue
            polynomial += 1
            spec = QuotientSpec(n, k, l)
            p = expand(from_quotient_spec(spec))
            if p is NotDivisible:
                violations.append(
                    CheckResult(spec, spec, True, VERDICT_VIOLATION,
                                note="divisor profile says polynomial, expansion refused")
                )
                continue
            nonneg, _ = nonnegativity(p)
            note = _structural_note(p)
            if nonneg and note is None:
                continue
            violations.append(
                CheckResult(
                    spec,
                    spec,
                    True,
                    VERDICT_VIOLATION if not nonneg else VERDICT_NONNEGATIVE,
                    properties=property_record(p),
                    note=note,
                )
            )
    return n, examined, polynomial, violations


def sweep_conjecture1(
    n_max: int,
    workers: int = 1,
    checkpoint: "str | None" = None,
    resume: bool = False,
    stop_after: "int | None" = None,
) -> SweepReport:
    """Exhaustive positivity sweep over 1 <= l < k <= n/2 for n <= n_max.

    Work is split by n, processed in increasing order (scheduling may be
    parallel; merging is ordered), and checkpointed after every completed
    n.  stop_after limits how many n values this call completes, which
    models interruption while leaving a resumable checkpoint.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    sweep_id = "conjecture1"
    params = {"n_max": n_max}
    cursor, counts, violations = _resume_state(checkpoint, resume, sweep_id, params)
    start_n = max(cursor, 1)

    units = list(range(start_n + 1, n_max + 1))
    if stop_after is not None:
        units = units[: max(stop_after, 0)]

    started = time.perf_counter()
    for n, examined, polynomial, unit_violations in _execute_units(
        units, _conjecture1_unit, workers
    ):
        counts["examined"] += examined
        counts["polynomial"] += polynomial
        counts["violations"] += len(unit_violations)
        violations.extend(unit_violations)
        cursor = n
        if checkpoint:
            _write_checkpoint(
                checkpoint,
                _checkpoint_payload(sweep_id, params, cursor, counts, violations),
            )
    return SweepReport(
        sweep_id=sweep_id,
        params=params,
        seed=None,
        counts=counts,
        violations=violations,
        cursor=cursor,
        wall_time=time.perf_counter() - started,
    )


def _draw(seed: int, index: int, field: str, lo: int, hi: int) -> int:
    """Deterministic uniform draw from [lo, hi] keyed by (seed, index, field)."""
    digest = hashlib.sha256(f"{seed}:{index}:{field}".encode()).digest()
    return lo + int.from_bytes(digest[:8], "big") % (hi - lo + 1)


def _sample_spec(template: str, seed: int, index: int, value_max: int, m_span: int) -> FakeGaussianSpec:
    s = _draw(seed, index, "s", 0, value_max)
    a = _draw(seed, index, "a", 0, value_max)
    b = _draw(seed, index, "b", 0, value_max)
    c = _draw(seed, index, "c", 0, value_max)
    core = {
        "a": (a,),
        "aa": (a, a),
        "aba": (a, b, a),
        "abcba": (a, b, c, b, a),
    }[template]
    m = _draw(seed, index, "m", max(1, s), s + m_span)
    return FakeGaussianSpec(m, (0,) * s + core + (0,) * s)


def _fake_gaussian_unit(task):
    template, seed, value_max, m_span, start, count = task
    examined = 0
    polynomial = 0
    violations: list[CheckResult] = []
    for index in range(start, start + count):
        spec = _sample_spec(template, seed, index, value_max, m_span)
        result = verify_fake_gaussian(spec)
        examined += 1
        if result.is_polynomial:
            polynomial += 1
        if result.verdict == VERDICT_VIOLATION:
            result.note = f"sample {index}"
            result.elapsed = 0.0  # stored records must not depend on timing
            violations.append(result)
    return start + count, examined, polynomial, violations


def sweep_fake_gaussian(
    template: str,
    seed: int,
    samples: int,
    value_max: int = 10,
    m_span: int = 200,
    workers: int = 1,
    checkpoint: "str | None" = None,
    resume: bool = False,
    stop_after: "int | None" = None,
    chunk: int = 200,
) -> SweepReport:
    """Randomized positivity sweep over symmetric product specs.

    Each sample index maps to a spec through the counter-based RNG, so the
    report depends only on (template, seed, samples, value_max, m_span).
    Work is chunked by index ranges; the cursor is the completed sample
    prefix.
    """
    if template not in FAKE_GAUSSIAN_TEMPLATES:
        raise ValueError(f"template must be one of {FAKE_GAUSSIAN_TEMPLATES}")
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    sweep_id = "fake-gaussian"
    params = {
        "template": template,
        "samples": samples,
        "value_max": value_max,
        "m_span": m_span,
        "seed": seed,
    }
    cursor, counts, violations = _resume_state(checkpoint, resume, sweep_id, params)

    units = []
    position = cursor
    while position < samples:
        size = min(chunk, samples - position)
        units.append((template, seed, value_max, m_span, position, size))
        position += size
    if stop_after is not None:
        units = units[: max(stop_after, 0)]

    started = time.perf_counter()
    for done, examined, polynomial, unit_violations in _execute_units(
        units, _fake_gaussian_unit, workers
    ):
        counts["examined"] += examined
        counts["polynomial"] += polynomial
        counts["violations"] += len(unit_violations)
        violations.extend(unit_violations)
        cursor = done
        if checkpoint:
            _write_checkpoint(
                checkpoint,
                _checkpoint_payload(sweep_id, params, cursor, counts, violations),
            )
    return SweepReport(
        sweep_id=sweep_id,
        params=params,
        seed=seed,
        counts=counts,
        violations=violations,
        cursor=cursor,
        wall_time=time.perf_counter() - started,
    )


def crosscheck_theorems(n_max: int) -> SweepReport:
    """Criterion-vs-expansion agreement for the two closed-form theorems.

    Examines the full admissible k range at both l=1 and l=2 for every
    n <= n_max.  A disagreement, or a polynomial expansion with a negative
    coefficient, is recorded as a violation: both would signal an
    implementation bug, since the criteria are proved.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    counts = {"examined": 0, "polynomial": 0, "violations": 0}
    violations: list[CheckResult] = []
    started = time.perf_counter()
    for n in range(2, n_max + 1):
        for l, criterion, k_range in (
            (1, thm8_is_polynomial, range(1, n)),
            (2, thm9_is_polynomial, range(2, n - 1)),
        ):
            for k in k_range:
                counts["examined"] += 1
                spec = QuotientSpec(n, k, l)
                p = expand(from_quotient_spec(spec))
                brute = p is not NotDivisible
                if brute:
                    counts["polynomial"] += 1
                note = None
                if criterion(n, k) != brute:
                    note = (
                        f"criterion says {criterion(n, k)}, expansion says {brute}"
                    )
                elif brute and not nonnegativity(p)[0]:
                    note = "polynomial expansion has a negative coefficient"
                if note:
                    counts["violations"] += 1
                    violations.append(
                        CheckResult(spec, spec, brute, VERDICT_VIOLATION, note=note)
                    )
    return SweepReport(
        sweep_id="crosscheck-theorems",
        params={"n_max": n_max},
        seed=None,
        counts=counts,
        violations=violations,
        cursor=n_max,
        wall_time=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# named reproductions

#: Factorial tops (numerator, denominator) of the four displayed quotients.
_REMARK25_FACTORIALS = (
    ((12, 2, 2), (11, 4, 1)),
    ((10, 4, 3, 1), (9, 5, 2, 2)),
    ((12, 2, 2, 2), (11, 4, 1, 1, 1)),
    ((12, 2, 2, 2, 2, 2), (11, 4, 1, 1, 1, 1, 1, 1, 1)),
)

#: Expected coefficient vectors for the four quotients, lowest degree first.
REMARK25_EXPECTED = (
    (1, 0, -1, 1, 1, -1, 0, 1),
    (1, 0, 1, -1, 1, 0, 1),
    (1, 1, -1, 0, 2, 0, -1, 1, 1),
    (1, 3, 2, -1, 1, 4, 1, -1, 2, 3, 1),
)


def reproduce_remark25() -> "list[tuple[FactoredQExpression, IntPolynomial]]":
    """Expand the four displayed factorial quotients.

    These are polynomials that are not nonnegative: small witnesses that
    the factorial-quotient generalization loses positivity.  Expected
    values live in REMARK25_EXPECTED; this function only computes.
    """
    pairs = []
    for numerator, denominator in _REMARK25_FACTORIALS:
        expr = from_factorials(numerator, denominator)
        p = expand(expr)
        assert p is not NotDivisible, str(expr)
        pairs.append((expr, p))
    return pairs


def reproduce_stanton(m_max: int = 50) -> "list[CheckResult]":
    """Verify the STANTON_SEQUENCE product for every m in 1..m_max.

    m=1 is the known positivity violation (coefficient -1 at q^7); each
    m >= 2 in the tested range expands to a nonnegative polynomial.
    Nothing is asserted beyond the tested bound.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    return [
        verify_fake_gaussian(FakeGaussianSpec(m, STANTON_SEQUENCE))
        for m in range(1, m_max + 1)
    ]


def _one_plus_q_power(j: int) -> IntPolynomial:
    return IntPolynomial((1,) + (0,) * (j - 1) + (1,))


def reproduce_corollary10(n_max: int) -> SweepReport:
    """Expand the even/odd quotient for n <= n_max and cross-check the route.

    The direct expansion must be a nonnegative polynomial, and must equal
    the product of the (n', k', l')=(3n+2, n+1, 2) quotient evaluated in
    q squared with the factors (1+q^j) for j = 3..2n+1.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    counts = {"examined": 0, "polynomial": 0, "violations": 0}
    violations: list[CheckResult] = []
    started = time.perf_counter()
    for n in range(1, n_max + 1):
        counts["examined"] += 1
        direct = expand(corollary10_expression(n))
        route_spec = QuotientSpec(3 * n + 2, n + 1, 2)
        note = None
        if direct is NotDivisible:
            note = "expansion refused"
        else:
            counts["polynomial"] += 1
            base = expand(from_quotient_spec(route_spec))
            if base is NotDivisible:
                note = "companion quotient is not a polynomial"
            else:
                via = base.substitute_q_power(2)
                for j in range(3, 2 * n + 2):
                    via = poly_mul(via, _one_plus_q_power(j))
                if via != direct:
                    note = "route comparison mismatch"
                elif not nonnegativity(direct)[0]:
                    note = "negative coefficient"
        if note:
            counts["violations"] += 1
            violations.append(
                CheckResult(
                    route_spec,
                    route_spec,
                    direct is not NotDivisible,
                    VERDICT_VIOLATION,
                    note=f"row n={n}: {note}",
                )
            )
    return SweepReport(
        sweep_id="corollary10",
        params={"n_max": n_max},
        seed=None,
        counts=counts,
        violations=violations,
        cursor=n_max,
        wall_time=time.perf_counter() - started,
    )
