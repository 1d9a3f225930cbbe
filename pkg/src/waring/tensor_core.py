"""Dense and compressed symmetric tensor representations and operations.

A DenseTensor holds all n^k complex entries of a cubical k-way array,
row-major with the first index slowest.  A SymmetricTensor holds one complex
value per exponent class p: the common entry a_j shared by every index tuple
j whose multiplicity vector is p.  The compressed form is canonical; dense
arrays are materialized on demand under a configurable entry cap.

Both containers are immutable after construction.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .combinatorics import as_exponent, enumerate_exponents, multinomial, sym_dimension
from .errors import CapacityError, SymmetryError, ValidationError

DENSE_ENTRY_CAP = 10_000_000
DEFAULT_SYMMETRY_TOL = 1e-12
DEFAULT_RANK_TOL = 1e-10


class DenseTensor:
    """Cubical order-k dim-n complex array."""

    __slots__ = ("order", "dim", "array")

    def __init__(self, array):
        arr = np.array(array, dtype=np.complex128)
        if arr.ndim < 1:
            raise ValidationError("a dense tensor needs order >= 1")
        n = arr.shape[0]
        if n < 1:
            raise ValidationError("a dense tensor needs dimension >= 1")
        if any(s != n for s in arr.shape):
            raise ValidationError(f"non-cubical shape {arr.shape}")
        arr.setflags(write=False)
        self.order = arr.ndim
        self.dim = n
        self.array = arr

    def __repr__(self):
        return f"DenseTensor(order={self.order}, dim={self.dim})"


class SymmetricTensor:
    """Order-k dim-n symmetric tensor keyed by exponent class.

    Absent classes are zero; exact zeros are pruned on construction, and the
    stored classes are kept in graded-lex order for deterministic iteration.
    """

    __slots__ = ("order", "dim", "coeffs")

    def __init__(self, order: int, dim: int, coeffs):
        if order < 1:
            raise ValidationError("a symmetric tensor needs order >= 1")
        if dim < 1:
            raise ValidationError("a symmetric tensor needs dimension >= 1")
        cleaned: dict[tuple[int, ...], complex] = {}
        for p, v in dict(coeffs).items():
            key = as_exponent(p)
            if len(key) != dim:
                raise ValidationError(f"exponent {key} has {len(key)} entries, expected {dim}")
            if sum(key) != order:
                raise ValidationError(f"exponent {key} has degree {sum(key)}, expected {order}")
            value = complex(v)
            if value != 0:
                cleaned[key] = value
        self.order = order
        self.dim = dim
        self.coeffs = {p: cleaned[p] for p in sorted(cleaned, reverse=True)}

    def __repr__(self):
        return f"SymmetricTensor(order={self.order}, dim={self.dim}, classes={len(self.coeffs)})"


def _exponent_of_index0(idx, n: int) -> tuple[int, ...]:
    """Multiplicity vector of a 0-based index tuple."""
    counts = [0] * n
    for i in idx:
        counts[i] += 1
    return tuple(counts)


def _canonical_index0(p) -> tuple[int, ...]:
    """Sorted 0-based index tuple representing the class of p."""
    out: list[int] = []
    for i, e in enumerate(p):
        out.extend([i] * e)
    return tuple(out)


def _worst_asymmetry(A: DenseTensor) -> tuple[float, tuple, tuple, float]:
    """Largest |a_j - a_canonical(j)|, its location, and the max entry magnitude."""
    arr = A.array
    scale = float(np.abs(arr).max()) if arr.size else 0.0
    worst = 0.0
    worst_idx: tuple = ()
    worst_canon: tuple = ()
    for idx in np.ndindex(arr.shape):
        canon = tuple(sorted(idx))
        if canon == idx:
            continue
        dev = abs(arr[idx] - arr[canon])
        if dev > worst:
            worst = dev
            worst_idx = idx
            worst_canon = canon
    return worst, worst_idx, worst_canon, scale


def is_symmetric(A: DenseTensor, tol: float = DEFAULT_SYMMETRY_TOL) -> bool:
    """True iff every entry matches its canonical (sorted-index) representative.

    The deviation is compared against tol * (1 + max entry magnitude).
    """
    if tol < 0:
        raise ValidationError("tolerance must be >= 0")
    worst, _, _, scale = _worst_asymmetry(A)
    return worst <= tol * (1.0 + scale)


def symmetrize(A: DenseTensor) -> DenseTensor:
    """Average each entry over all permutations of its index tuple.

    Computed by class averaging over canonical index multisets rather than
    an explicit k! permutation sum; the two agree because every permutation
    class member appears the same number of times.
    """
    arr = A.array
    sums: dict[tuple, complex] = {}
    counts: dict[tuple, int] = {}
    for idx in np.ndindex(arr.shape):
        canon = tuple(sorted(idx))
        sums[canon] = sums.get(canon, 0j) + arr[idx]
        counts[canon] = counts.get(canon, 0) + 1
    out = np.empty_like(arr)
    means = {canon: sums[canon] / counts[canon] for canon in sums}
    for idx in np.ndindex(arr.shape):
        out[idx] = means[tuple(sorted(idx))]
    return DenseTensor(out)


def compress(A: DenseTensor, tol: float = DEFAULT_SYMMETRY_TOL) -> SymmetricTensor:
    """Store one value per exponent class of a symmetric dense tensor.

    The stored value is the entry at the canonical index tuple, so the
    round trip through decompress is exact for exactly symmetric input.
    """
    worst, idx, canon, scale = _worst_asymmetry(A)
    if worst > tol * (1.0 + scale):
        raise SymmetryError(
            f"tensor is not symmetric: |a{idx} - a{canon}| = {worst:.3e} "
            f"exceeds {tol:.1e} * (1 + {scale:.3e})",
            index=idx,
            canonical=canon,
        )
    arr = A.array
    coeffs = {}
    for p in enumerate_exponents(A.order, A.dim):
        coeffs[p] = complex(arr[_canonical_index0(p)])
    return SymmetricTensor(A.order, A.dim, coeffs)


def decompress(S: SymmetricTensor, max_entries: int = DENSE_ENTRY_CAP) -> DenseTensor:
    """Materialize the full n^k dense array of a compressed symmetric tensor."""
    total = S.dim**S.order
    if total > max_entries:
        raise CapacityError(
            f"dense form needs {total} entries, above the cap of {max_entries}"
        )
    arr = np.zeros((S.dim,) * S.order, dtype=np.complex128)
    for p, v in S.coeffs.items():
        canon = _canonical_index0(p)
        members = np.array(sorted(set(itertools.permutations(canon))), dtype=np.intp)
        arr[tuple(members.T)] = v
    return DenseTensor(arr)


def outer_power(v, k: int) -> SymmetricTensor:
    """k-fold symmetric outer power of a vector: coeffs[p] = prod_i v_i^p_i."""
    if k < 1:
        raise ValidationError("outer power needs order k >= 1")
    vec = [complex(c) for c in v]
    n = len(vec)
    if n < 1:
        raise ValidationError("outer power needs a nonempty vector")
    coeffs = {}
    for p in enumerate_exponents(k, n):
        val = 1.0 + 0j
        for c, e in zip(vec, p):
            if e:
                val *= c**e
        coeffs[p] = val
    return SymmetricTensor(k, n, coeffs)


def contract_mode1(A: DenseTensor, B: DenseTensor):
    """Contract the first modes: c[i2.., j2..] = sum_a a[a, i2..] b[a, j2..].

    Two vectors contract to a plain complex scalar.
    """
    if A.dim != B.dim:
        raise ValidationError(f"first-mode dimensions differ: {A.dim} vs {B.dim}")
    out = np.tensordot(A.array, B.array, axes=([0], [0]))
    if out.ndim == 0:
        return complex(out)
    return DenseTensor(out)


def multilinear_transform(A: DenseTensor, maps) -> DenseTensor:
    """Apply one matrix per mode: a'[p..] = sum L1[p,i] L2[q,j] ... a[ij..].

    Every map must have column count equal to the tensor dimension and all
    maps must share one row count, since the result stays cubical.
    """
    mats = [np.asarray(M, dtype=np.complex128) for M in maps]
    if len(mats) != A.order:
        raise ValidationError(f"need {A.order} maps for an order-{A.order} tensor, got {len(mats)}")
    for mode, M in enumerate(mats):
        if M.ndim != 2:
            raise ValidationError(f"map for mode {mode} is not a matrix")
        if M.shape[1] != A.dim:
            raise ValidationError(
                f"map for mode {mode} has {M.shape[1]} columns, expected {A.dim}"
            )
    rows = {M.shape[0] for M in mats}
    if len(rows) != 1:
        raise ValidationError("maps must share one row count so the result stays cubical")
    arr = A.array
    for mode, M in enumerate(mats):
        arr = np.moveaxis(np.tensordot(M, arr, axes=([1], [mode])), 0, mode)
    return DenseTensor(arr)


def numerical_rank(matrix, tol: float = DEFAULT_RANK_TOL) -> int:
    """Singular values above tol times the largest column norm."""
    m = np.atleast_2d(np.asarray(matrix, dtype=np.complex128))
    if m.size == 0:
        return 0
    col_scale = float(np.linalg.norm(m, axis=0).max())
    if col_scale == 0.0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.count_nonzero(s > tol * col_scale))


def coefficient_vector(S: SymmetricTensor, scaled: bool = True) -> np.ndarray:
    """Graded-lex coefficient vector of a symmetric tensor.

    With scaled=True each class entry is multiplied by sqrt(multinomial(p)),
    so Euclidean inner products of these vectors equal dense Frobenius inner
    products.
    """
    exps = enumerate_exponents(S.order, S.dim)
    out = np.zeros(len(exps), dtype=np.complex128)
    for col, p in enumerate(exps):
        v = S.coeffs.get(p)
        if v is not None:
            out[col] = v * math.sqrt(multinomial(p)) if scaled else v
    return out


def power_span_rank(vectors, k: int, tol: float = DEFAULT_RANK_TOL) -> int:
    """Numerical rank of the span of the outer powers v_i^xk.

    Rows are sqrt(multinomial)-scaled compressed coefficient vectors, so the
    rank decision matches dense Frobenius geometry.
    """
    vecs = list(vectors)
    if not vecs:
        raise ValidationError("power_span_rank needs at least one vector")
    n = len(vecs[0])
    rows = np.zeros((len(vecs), sym_dimension(k, n)), dtype=np.complex128)
    for r, v in enumerate(vecs):
        if len(v) != n:
            raise ValidationError("vectors must share one dimension")
        rows[r] = coefficient_vector(outer_power(v, k), scaled=True)
    return numerical_rank(rows, tol)


def mode1_unfolding(A: DenseTensor) -> np.ndarray:
    """Flatten a dense tensor to the n x n^(k-1) matrix of its first mode."""
    return np.reshape(A.array, (A.dim, -1))


def frobenius_norm(A: SymmetricTensor) -> float:
    """Dense-array Euclidean norm computed in compressed form."""
    total = 0.0
    for p, v in A.coeffs.items():
        total += multinomial(p) * abs(v) ** 2
    return math.sqrt(total)


def frobenius_distance(A: SymmetricTensor, B: SymmetricTensor) -> float:
    """Dense-array Euclidean distance computed in compressed form."""
    if (A.order, A.dim) != (B.order, B.dim):
        raise ValidationError(
            f"shape mismatch: ({A.order}, {A.dim}) vs ({B.order}, {B.dim})"
        )
    total = 0.0
    for p in A.coeffs.keys() | B.coeffs.keys():
        diff = A.coeffs.get(p, 0j) - B.coeffs.get(p, 0j)
        total += multinomial(p) * abs(diff) ** 2
    return math.sqrt(total)


def _complex_pair(value: complex) -> list[float]:
    c = complex(value)
    return [c.real, c.imag]


def tensor_to_json_obj(x) -> dict:
    """JSON object for a DenseTensor (format dense) or SymmetricTensor (format sym)."""
    if isinstance(x, DenseTensor):
        flat = x.array.reshape(-1)
        return {
            "order": x.order,
            "dim": x.dim,
            "format": "dense",
            "entries": [_complex_pair(v) for v in flat],
        }
    if isinstance(x, SymmetricTensor):
        return {
            "order": x.order,
            "dim": x.dim,
            "format": "sym",
            "coeffs": [
                {"exponent": list(p), "value": _complex_pair(v)}
                for p, v in x.coeffs.items()
            ],
        }
    raise ValidationError(f"cannot serialize {type(x).__name__} as a tensor")


def _read_pair(obj, field: str) -> complex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in obj)
    ):
        raise ValidationError(f"field '{field}': expected a [re, im] number pair")
    return complex(obj[0], obj[1])


def tensor_from_json_obj(obj):
    """Parse the tensor JSON format back into a DenseTensor or SymmetricTensor."""
    if not isinstance(obj, dict):
        raise ValidationError("field '<root>': expected a JSON object")
    fmt = obj.get("format")
    if fmt == "dense":
        for key in ("order", "dim", "entries"):
            if key not in obj:
                raise ValidationError(f"field '{key}': missing")
        order, dim = obj["order"], obj["dim"]
        if not isinstance(order, int) or order < 1:
            raise ValidationError("field 'order': expected a positive integer")
        if not isinstance(dim, int) or dim < 1:
            raise ValidationError("field 'dim': expected a positive integer")
        entries = obj["entries"]
        if not isinstance(entries, list) or len(entries) != dim**order:
            got = len(entries) if isinstance(entries, list) else type(entries).__name__
            raise ValidationError(f"field 'entries': expected {dim**order} pairs, got {got}")
        flat = [_read_pair(e, "entries") for e in entries]
        return DenseTensor(np.array(flat, dtype=np.complex128).reshape((dim,) * order))
    if fmt == "sym":
        coeffs_json = obj.get("coeffs")
        if not isinstance(coeffs_json, list):
            raise ValidationError("field 'coeffs': expected a list")
        coeffs = {}
        nvars = None
        for item in coeffs_json:
            if not isinstance(item, dict) or "exponent" not in item or "value" not in item:
                raise ValidationError("field 'coeffs': each item needs 'exponent' and 'value'")
            exp = item["exponent"]
            if not isinstance(exp, list) or not all(isinstance(e, int) for e in exp):
                raise ValidationError("field 'exponent': expected a list of integers")
            p = as_exponent(exp)
            if nvars is None:
                nvars = len(p)
            coeffs[p] = coeffs.get(p, 0j) + _read_pair(item["value"], "value")
        order = obj.get("order")
        dim = obj.get("dim")
        if order is None or dim is None:
            if not coeffs:
                raise ValidationError(
                    "field 'order'/'dim': required when 'coeffs' is empty"
                )
            some = next(iter(coeffs))
            order = sum(some) if order is None else order
            dim = len(some) if dim is None else dim
        if not isinstance(order, int) or order < 1:
            raise ValidationError("field 'order': expected a positive integer")
        if not isinstance(dim, int) or dim < 1:
            raise ValidationError("field 'dim': expected a positive integer")
        return SymmetricTensor(order, dim, coeffs)
    raise ValidationError("field 'format': must be 'dense' or 'sym'")
