"""Constructive symmetric outer product decompositions.

Three constructions are explicit enough to implement exactly: the binary
monomial z1*z2^(k-1), decomposed into k powers of linear forms through the
k-th roots of unity; 2x2x2 symmetric tensors, decomposed through the
eigenvalues of the slice pencil (A0, A1) over R or C; and three border-rank
demonstration sequences whose members have low symmetric rank but whose
limits do not.  A universal verifier measures any stated decomposition
against any target tensor.

Decomposition terms are normalized so the first nonzero component of each
vector is 1, with the scale absorbed into the weight, and sorted by the
second vector component so serialized output is deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import enumerate_exponents
from .errors import DegeneratePencilError, ValidationError
from .tensor_core import (
    SymmetricTensor,
    compress,
    decompress,
    frobenius_distance,
    frobenius_norm,
    multilinear_transform,
    numerical_rank,
    outer_power,
)

DEFAULT_VERIFY_TOL = 1e-9
PENCIL_DEGENERACY_TOL = 1e-12
REAL_FIELD_TOL = 1e-12
DEFAULT_EPSILONS = tuple(2.0**-i for i in range(3, 11))

_SYM222_CLASSES = ((3, 0), (2, 1), (1, 2), (0, 3))


@dataclass(frozen=True)
class SymmetricDecomposition:
    """Terms (weight, vector) representing sum_i weight_i * vector_i^xk."""

    order: int
    dim: int
    terms: tuple[tuple[complex, tuple[complex, ...]], ...]
    field_tag: str


def make_decomposition(order: int, dim: int, terms, field_tag: str | None = None) -> SymmetricDecomposition:
    """Normalize, validate, and deterministically order decomposition terms.

    Each vector is scaled so its first nonzero component is 1, the k-th power
    of the scale moving into the weight.  field_tag None auto-detects: R when
    every weight and component has imaginary part at most 1e-12 in magnitude,
    C otherwise.  field_tag "R" additionally casts those parts to zero.
    """
    if order < 1:
        raise ValidationError("a decomposition needs order >= 1")
    if dim < 1:
        raise ValidationError("a decomposition needs dimension >= 1")
    normalized: list[tuple[complex, tuple[complex, ...]]] = []
    for weight, vector in terms:
        v = tuple(complex(c) for c in vector)
        if len(v) != dim:
            raise ValidationError(f"vector {v} has {len(v)} components, expected {dim}")
        pivot = next((c for c in v if c != 0), None)
        if pivot is None:
            raise ValidationError("decomposition vectors must be nonzero")
        normalized.append((complex(weight) * pivot**order, tuple(c / pivot for c in v)))

    def imag_span(entries):
        return max((abs(x.imag) for x in entries), default=0.0)

    flat = [w for w, _ in normalized] + [c for _, v in normalized for c in v]
    if field_tag is None:
        field_tag = "R" if imag_span(flat) <= REAL_FIELD_TOL else "C"
    if field_tag not in ("R", "C"):
        raise ValidationError("field tag must be 'R' or 'C'")
    if field_tag == "R":
        if imag_span(flat) > REAL_FIELD_TOL:
            raise ValidationError(
                f"field tag R requires imaginary parts at most {REAL_FIELD_TOL}"
            )
        normalized = [
            (complex(w.real, 0.0), tuple(complex(c.real, 0.0) for c in v))
            for w, v in normalized
        ]

    def sort_key(term):
        w, v = term
        anchor = v[1] if len(v) > 1 else v[0]
        return (anchor.real, anchor.imag, w.real, w.imag)

    return SymmetricDecomposition(order, dim, tuple(sorted(normalized, key=sort_key)), field_tag)


def reconstruct(D: SymmetricDecomposition) -> SymmetricTensor:
    """Sum of weighted outer powers, in compressed form."""
    acc: dict[tuple[int, ...], complex] = {}
    for weight, vector in D.terms:
        for p, v in outer_power(vector, D.order).coeffs.items():
            acc[p] = acc.get(p, 0j) + weight * v
    return SymmetricTensor(D.order, D.dim, acc)


@dataclass(frozen=True)
class VerifyReport:
    residual: float
    ok: bool
    stated_rank: int


def verify(D: SymmetricDecomposition, A: SymmetricTensor, tol: float = DEFAULT_VERIFY_TOL) -> VerifyReport:
    """Frobenius residual of reconstruct(D) against A, passed at tol*(1+||A||)."""
    if (D.order, D.dim) != (A.order, A.dim):
        raise ValidationError(
            f"shape mismatch: decomposition ({D.order}, {D.dim}) vs tensor ({A.order}, {A.dim})"
        )
    if tol < 0:
        raise ValidationError("tolerance must be >= 0")
    residual = frobenius_distance(reconstruct(D), A)
    return VerifyReport(residual, residual <= tol * (1.0 + frobenius_norm(A)), len(D.terms))


def binary_monomial_tensor(k: int) -> SymmetricTensor:
    """The symmetric tensor of the quantic z1 * z2^(k-1): one class entry 1/k."""
    if k < 2:
        raise ValidationError("the monomial construction needs order k >= 2")
    return SymmetricTensor(k, 2, {(1, k - 1): 1.0 / k})


def decompose_monomial_rank_k(k: int) -> SymmetricDecomposition:
    """Rank-k decomposition of the tensor of z1 * z2^(k-1) over C.

    The directions are (1, beta_i) with beta_i the k-th roots of unity
    (distinct and summing to zero), and the weights beta_i / k^2 solve the
    Vandermonde moment system sum_i w_i beta_i^t = delta(t, k-1) / k by the
    inverse discrete Fourier relations; the t = k moment vanishes because
    the weights sum to zero.
    """
    if k < 2:
        raise ValidationError("the monomial construction needs order k >= 2")
    roots = [cmath.exp(2j * cmath.pi * i / k) for i in range(k)]
    terms = [(b / k**2, (1.0 + 0j, b)) for b in roots]
    return make_decomposition(k, 2, terms, field_tag="C")


def pencil_quadratic(A: SymmetricTensor) -> tuple[complex, complex, complex]:
    """Coefficients (a, b, c) of det(A0 - t*A1) = a t^2 + b t + c.

    A0 and A1 are the two slices of a 2x2x2 symmetric tensor along the first
    index; with class entries c30, c21, c12, c03 the coefficients are
    a = c21 c03 - c12^2, b = c21 c12 - c30 c03, c = c30 c12 - c21^2.
    """
    _require_sym222(A)
    c30, c21, c12, c03 = (A.coeffs.get(p, 0j) for p in _SYM222_CLASSES)
    return (
        c21 * c03 - c12 * c12,
        c21 * c12 - c30 * c03,
        c30 * c12 - c21 * c21,
    )


def _require_sym222(A: SymmetricTensor) -> None:
    if (A.order, A.dim) != (3, 2):
        raise ValidationError(
            f"the pencil method handles order 3 dimension 2, got ({A.order}, {A.dim})"
        )


def _stable_quadratic_roots(a: complex, b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of a t^2 + b t + c with the cancellation-free branch choice."""
    sq = cmath.sqrt(b * b - 4 * a * c)
    q = -(b + sq) / 2 if abs(b + sq) >= abs(b - sq) else -(b - sq) / 2
    return q / a, c / q


def _two_term_weights(A: SymmetricTensor, directions, real: bool):
    """Least-squares weights fitting A over the four exponent classes."""
    dtype = np.float64 if real else np.complex128
    m = np.zeros((4, len(directions)), dtype=dtype)
    rhs = np.zeros(4, dtype=dtype)
    for row, p in enumerate(_SYM222_CLASSES):
        entry = A.coeffs.get(p, 0j)
        rhs[row] = entry.real if real else entry
        for col, d in enumerate(directions):
            val = (d[0] ** p[0]) * (d[1] ** p[1])
            m[row, col] = val.real if real else val
    weights, _, _, _ = np.linalg.lstsq(m, rhs, rcond=None)
    return list(weights)


@dataclass(frozen=True)
class PencilResult:
    """Classification plus the witnessing decomposition."""

    classification: str
    decomposition: SymmetricDecomposition


def decompose_sym222_pencil(A: SymmetricTensor, field: str = "C") -> PencilResult:
    """Decompose a 2x2x2 symmetric tensor through its slice-pencil eigenvalues.

    Generic tensors split into two powers of linear forms whose directions
    (t, 1) come from the roots of det(A0 - t*A1); a vanishing leading
    coefficient contributes the infinite-eigenvalue direction (1, 0).  Over R
    with complex-conjugate roots no real two-term decomposition exists and a
    verified three-term real decomposition is returned instead, classified
    real_rank_3.  Degenerate pencils (zero or constant determinant, double
    eigenvalue) raise DegeneratePencilError.
    """
    _require_sym222(A)
    if field not in ("R", "C"):
        raise ValidationError("field must be 'R' or 'C'")
    entry_scale = max((abs(v) for v in A.coeffs.values()), default=0.0)
    if field == "R":
        worst_imag = max((abs(v.imag) for v in A.coeffs.values()), default=0.0)
        if worst_imag > REAL_FIELD_TOL * (1.0 + entry_scale):
            raise ValidationError("field R needs a real tensor")
    a, b, c = pencil_quadratic(A)
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0:
        raise DegeneratePencilError("pencil determinant vanishes identically")
    tol = PENCIL_DEGENERACY_TOL
    linear = abs(a) <= tol * scale
    if linear and abs(b) <= tol * scale:
        raise DegeneratePencilError("pencil determinant is constant in the eigenvalue")

    if field == "C":
        if linear:
            directions = [(-c / b, 1.0 + 0j), (1.0 + 0j, 0j)]
        else:
            if abs(b * b - 4 * a * c) <= tol * scale**2:
                raise DegeneratePencilError("double eigenvalue")
            r1, r2 = _stable_quadratic_roots(a, b, c)
            directions = [(r1, 1.0 + 0j), (r2, 1.0 + 0j)]
        weights = _two_term_weights(A, directions, real=False)
        terms = list(zip(weights, directions))
        return PencilResult("rank_2", make_decomposition(3, 2, terms, field_tag="C"))

    ar, br, cr = a.real, b.real, c.real
    if linear:
        directions_r = [(-cr / br, 1.0), (1.0, 0.0)]
    else:
        disc = br * br - 4 * ar * cr
        if abs(disc) <= tol * scale**2:
            raise DegeneratePencilError("double eigenvalue")
        if disc < 0:
            return PencilResult("real_rank_3", _real_rank3_decomposition(A))
        sq = math.sqrt(disc)
        q = -(br + sq) / 2 if abs(br + sq) >= abs(br - sq) else -(br - sq) / 2
        directions_r = [(q / ar, 1.0), (cr / q, 1.0)]
    weights = _two_term_weights(A, directions_r, real=True)
    terms = list(zip(weights, directions_r))
    return PencilResult("rank_2", make_decomposition(3, 2, terms, field_tag="R"))


def _rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def _real_rank3_decomposition(A: SymmetricTensor) -> SymmetricDecomposition:
    """Three real powers of linear forms summing to a real 2x2x2 tensor.

    In rotated coordinates the node directions (1,1), (1,-1), (1,0) span the
    cubics whose class entries satisfy a21 = a03.  The gap g(theta) =
    a21(theta) - a03(theta) flips sign under a half-turn (an order-3 tensor
    is odd under negation), so a rotation with g = 0 always exists; there the
    three weights solve the remaining triangular system exactly.
    """
    dense = decompress(A)

    def rotated_entries(theta: float) -> list[float]:
        rotated = multilinear_transform(dense, [_rotation(theta)] * 3)
        s = compress(rotated)
        return [s.coeffs.get(p, 0j).real for p in _SYM222_CLASSES]

    def gap(theta: float) -> float:
        a30, a21, a12, a03 = rotated_entries(theta)
        return a21 - a03

    thetas = np.linspace(0.0, math.pi, 65)
    gaps = [gap(t) for t in thetas]
    gap_scale = max(abs(g) for g in gaps)
    entry_scale = max((abs(v) for v in A.coeffs.values()), default=0.0)
    if gap_scale <= 1e-14 * (1.0 + entry_scale) or abs(gaps[0]) <= 1e-13 * gap_scale:
        theta_star = 0.0
    else:
        bracket = next(
            (i for i in range(len(thetas) - 1) if gaps[i] * gaps[i + 1] <= 0), None
        )
        if bracket is None:
            raise RuntimeError("sign change of the rotation gap not found")
        lo, hi = float(thetas[bracket]), float(thetas[bracket + 1])
        g_lo = gaps[bracket]
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            g_mid = gap(mid)
            if g_lo * g_mid <= 0:
                hi = mid
            else:
                lo, g_lo = mid, g_mid
        theta_star = 0.5 * (lo + hi)

    a30, a21, a12, a03 = rotated_entries(theta_star)
    w1 = (a12 + a03) / 2
    w2 = (a12 - a03) / 2
    w3 = a30 - a12
    back = _rotation(theta_star).T
    nodes = [(1.0, 1.0), (1.0, -1.0), (1.0, 0.0)]
    directions = [tuple(back @ np.array(u)) for u in nodes]
    candidate = make_decomposition(3, 2, list(zip((w1, w2, w3), directions)), field_tag="R")
    if verify(candidate, A).ok:
        return candidate
    # perturbed node set, weights by least squares over the four classes
    nodes = [(1.0, 1.0), (1.0, -1.0), (1.0, 2.0)]
    directions = [tuple(back @ np.array(u)) for u in nodes]
    weights = _two_term_weights(A, directions, real=True)
    candidate = make_decomposition(3, 2, list(zip(weights, directions)), field_tag="R")
    if verify(candidate, A).ok:
        return candidate
    raise RuntimeError("three-term real template failed to reproduce the tensor")


def _vcombine(u, v, s) -> tuple[complex, ...]:
    return tuple(complex(a) + s * complex(b) for a, b in zip(u, v))


def _tangent_tensor(x, y, k: int) -> SymmetricTensor:
    """Derivative of the outer power along y: d/de (x + e y)^xk at e = 0."""
    xs = [complex(c) for c in x]
    ys = [complex(c) for c in y]
    n = len(xs)
    coeffs: dict[tuple[int, ...], complex] = {}
    for p in enumerate_exponents(k, n):
        total = 0j
        for i, e in enumerate(p):
            if e == 0:
                continue
            term = e * ys[i] * xs[i] ** (e - 1)
            for ell, q in enumerate(p):
                if ell != i and q:
                    term *= xs[ell] ** q
            total += term
        coeffs[p] = total
    return SymmetricTensor(k, n, coeffs)


@dataclass(frozen=True)
class BorderSequenceSpec:
    """One border-rank demonstration family with its epsilon schedule."""

    kind: str
    base_vectors: tuple[tuple[complex, ...], ...]
    order: int
    epsilons: tuple[float, ...]


BORDER_KINDS = ("rank2_to_3", "rank2_to_k", "tangent_sum")


def make_border_spec(
    kind: str,
    base_vectors=None,
    order: int | None = None,
    epsilons=None,
) -> BorderSequenceSpec:
    """Validate and default a border-sequence specification.

    rank2_to_3 and rank2_to_k take two independent base vectors (default
    e1, e2 over C^2); tangent_sum takes three (default e1, e2, e3 over C^3).
    Only rank2_to_k accepts an order other than 3.
    """
    if kind not in BORDER_KINDS:
        raise ValidationError(f"kind must be one of {BORDER_KINDS}")
    wanted = 3 if kind == "tangent_sum" else 2
    if base_vectors is None:
        base_vectors = tuple(
            tuple(1.0 + 0j if i == j else 0j for j in range(wanted)) for i in range(wanted)
        )
    base = tuple(tuple(complex(c) for c in v) for v in base_vectors)
    if len(base) != wanted:
        raise ValidationError(f"{kind} needs {wanted} base vectors, got {len(base)}")
    if len({len(v) for v in base}) != 1:
        raise ValidationError("base vectors must share one dimension")
    for i in range(len(base)):
        for j in range(i + 1, len(base)):
            if numerical_rank(np.array([base[i], base[j]])) != 2:
                raise ValidationError(f"base vectors {i} and {j} are linearly dependent")
    if order is None:
        order = 3
    if kind != "rank2_to_k" and order != 3:
        raise ValidationError(f"{kind} is an order-3 family")
    if order < 3:
        raise ValidationError("border sequences need order >= 3")
    eps = DEFAULT_EPSILONS if epsilons is None else tuple(float(e) for e in epsilons)
    if any(e <= 0 for e in eps):
        raise ValidationError("epsilon schedule must be positive")
    return BorderSequenceSpec(kind, base, order, eps)


@dataclass(frozen=True)
class BorderStep:
    """One sequence member, the sequence limit, and the low-rank witness."""

    a_eps: SymmetricTensor
    a_limit: SymmetricTensor
    witness: SymmetricDecomposition


def border_sequence(spec: BorderSequenceSpec, epsilon: float) -> BorderStep:
    """Evaluate one member of a border-rank family.

    The member A_eps is reconstructed exactly from its low-rank witness and
    the limit A_0 from its closed form, so frobenius_distance(A_eps, A_0)
    measures the approach; it shrinks linearly in epsilon for every kind.
    rank2_to_3 walks its family along eta = sqrt(epsilon), the schedule that
    makes the approach linear, with the two-term witness
    eta^2 (x + y/eta)^x3 + eta^2 (x - y/eta)^x3.
    """
    if epsilon <= 0:
        raise ValidationError("epsilon must be positive; the witness is undefined at the limit")
    n = len(spec.base_vectors[0])
    if spec.kind == "rank2_to_k":
        x, y = spec.base_vectors
        k = spec.order
        witness = make_decomposition(
            k, n,
            [(1.0 / epsilon, _vcombine(x, y, epsilon)), (-1.0 / epsilon, x)],
        )
        limit = _tangent_tensor(x, y, k)
    elif spec.kind == "rank2_to_3":
        x, y = spec.base_vectors
        eta = math.sqrt(epsilon)
        witness = make_decomposition(
            3, n,
            [(eta**2, _vcombine(x, y, 1.0 / eta)), (eta**2, _vcombine(x, y, -1.0 / eta))],
        )
        tangent = _tangent_tensor(y, x, 3)
        limit = SymmetricTensor(3, n, {p: 2 * v for p, v in tangent.coeffs.items()})
    else:
        x, y, z = spec.base_vectors
        witness = make_decomposition(
            3, n,
            [
                (1.0 / epsilon, _vcombine(x, y, epsilon)),
                (-1.0 / epsilon, x),
                (1.0 / epsilon, _vcombine(z, x, epsilon)),
                (-1.0 / epsilon, z),
            ],
        )
        first = _tangent_tensor(x, y, 3)
        second = _tangent_tensor(z, x, 3)
        acc = dict(first.coeffs)
        for p, v in second.coeffs.items():
            acc[p] = acc.get(p, 0j) + v
        limit = SymmetricTensor(3, n, acc)
    return BorderStep(reconstruct(witness), limit, witness)


def limit_decomposition(spec: BorderSequenceSpec) -> SymmetricDecomposition:
    """An explicit higher-rank decomposition of the sequence limit.

    rank2_to_3: the three-term identity (x+y)^x3 + (x-y)^x3 - 2 x^x3.
    rank2_to_k: k terms k*w_i (beta_i x + y)^xk from the monomial
    construction with the variable roles swapped.  tangent_sum: six terms,
    three per tangent direction, the same way.
    """
    if spec.kind == "rank2_to_3":
        x, y = spec.base_vectors
        terms = [
            (1.0 + 0j, _vcombine(x, y, 1.0)),
            (1.0 + 0j, _vcombine(x, y, -1.0)),
            (-2.0 + 0j, x),
        ]
        return make_decomposition(3, len(x), terms)
    if spec.kind == "rank2_to_k":
        x, y = spec.base_vectors
        k = spec.order
        mono = decompose_monomial_rank_k(k)
        # monomial vectors arrive normalized as (1, beta_i)
        terms = [(k * w, _vcombine(y, x, vec[1])) for w, vec in mono.terms]
        return make_decomposition(k, len(x), terms, field_tag="C")
    x, y, z = spec.base_vectors
    mono = decompose_monomial_rank_k(3)
    terms = []
    for w, vec in mono.terms:
        terms.append((3 * w, _vcombine(y, x, vec[1])))
        terms.append((3 * w, _vcombine(x, z, vec[1])))
    return make_decomposition(3, len(x), terms, field_tag="C")


def border_distance_table(spec: BorderSequenceSpec) -> list[tuple[float, float]]:
    """(epsilon, frobenius distance to the limit) over the stored schedule."""
    out = []
    for eps in spec.epsilons:
        step = border_sequence(spec, eps)
        out.append((eps, frobenius_distance(step.a_eps, step.a_limit)))
    return out


def fit_loglog_slope(table) -> float:
    """Least-squares slope of log distance against log epsilon."""
    pairs = [(e, d) for e, d in table if d > 0]
    if len(pairs) < 2:
        raise ValidationError("need at least two positive distances to fit a slope")
    eps = np.log([e for e, _ in pairs])
    dist = np.log([d for _, d in pairs])
    return float(np.polyfit(eps, dist, 1)[0])


def _complex_pair(value: complex) -> list[float]:
    c = complex(value)
    return [c.real, c.imag]


def decomposition_to_json_obj(D: SymmetricDecomposition) -> dict:
    """JSON object for a decomposition."""
    return {
        "order": D.order,
        "dim": D.dim,
        "field": D.field_tag,
        "terms": [
            {"weight": _complex_pair(w), "vector": [_complex_pair(c) for c in v]}
            for w, v in D.terms
        ],
    }


def _read_pair(obj, field: str) -> complex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in obj)
    ):
        raise ValidationError(f"field '{field}': expected a [re, im] number pair")
    return complex(obj[0], obj[1])


def decomposition_from_json_obj(obj) -> SymmetricDecomposition:
    """Parse the decomposition JSON format; terms are renormalized on input."""
    if not isinstance(obj, dict):
        raise ValidationError("field '<root>': expected a JSON object")
    for key in ("order", "dim", "field", "terms"):
        if key not in obj:
            raise ValidationError(f"field '{key}': missing")
    order, dim, field = obj["order"], obj["dim"], obj["field"]
    if not isinstance(order, int) or order < 1:
        raise ValidationError("field 'order': expected a positive integer")
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError("field 'dim': expected a positive integer")
    if field not in ("R", "C"):
        raise ValidationError("field 'field': must be 'R' or 'C'")
    terms_json = obj["terms"]
    if not isinstance(terms_json, list) or not terms_json:
        raise ValidationError("field 'terms': expected a nonempty list")
    terms = []
    for item in terms_json:
        if not isinstance(item, dict) or "weight" not in item or "vector" not in item:
            raise ValidationError("field 'terms': each item needs 'weight' and 'vector'")
        vec = item["vector"]
        if not isinstance(vec, list) or len(vec) != dim:
            raise ValidationError(f"field 'vector': expected {dim} component pairs")
        terms.append(
            (_read_pair(item["weight"], "weight"), tuple(_read_pair(c, "vector") for c in vec))
        )
    return make_decomposition(order, dim, terms, field_tag=field)
