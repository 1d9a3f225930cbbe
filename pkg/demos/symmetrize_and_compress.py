"""Round trip between dense arrays, the symmetrizer, and compressed storage.

A symmetric tensor of order k in dimension n has only C(n+k-1, k) distinct
entries.  This walk-through symmetrizes a dense array, checks the result
against the fixed-point definition, compresses it to one value per exponent
class, and shows the JSON wire format used by the command-line tool.
"""

import json

import numpy as np

from waring import (
    DenseTensor,
    compress,
    decompress,
    is_symmetric,
    sym_dimension,
    symmetrize,
    tensor_to_json_obj,
)

rng = np.random.default_rng(1)
a = DenseTensor(rng.normal(size=(2, 2, 2)))
print("random dense 2x2x2, symmetric?", is_symmetric(a))

s = symmetrize(a)
print("after averaging over all 6 index permutations, symmetric?", is_symmetric(s))
print("fixed point of the symmetrizer?", np.allclose(s.array, symmetrize(s).array))

c = compress(s)
print(f"\ndistinct classes stored: {len(c.coeffs)} (dimension formula gives "
      f"{sym_dimension(3, 2)})")
for p, v in sorted(c.coeffs.items(), reverse=True):
    print(f"  class {p}: {v.real:+.6f}")

back = decompress(c)
print("\ndecompress reproduces the dense array:", np.allclose(back.array, s.array))

print("\nJSON form (one coefficient per class):")
print(json.dumps(tensor_to_json_obj(c), indent=2)[:400])
