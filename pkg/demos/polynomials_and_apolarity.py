"""Symmetric tensors as homogeneous polynomials and the apolar pairing.

Order-k symmetric tensors in dimension n are the same thing as degree-k
forms in n variables.  The pairing <F, G> = sum multinomial(p) a_p b_p is
non-degenerate and satisfies the reproducing identity <F, L^k> = F(beta)
for the k-th power of a linear form L with coefficient vector beta.
"""

import numpy as np

from waring import (
    LinearForm,
    SymmetricTensor,
    apolar_form,
    enumerate_exponents,
    evaluate,
    parse_quantic,
    quantic_to_tensor,
    render_quantic,
    tensor_to_quantic,
    veronese,
)

f = parse_quantic("2*x1^3 - 3*x1*x2^2 + 1*x2^3")
print("parsed:", render_quantic(f))
t = quantic_to_tensor(f)
print("stored classes (multinomial scaling folded out):")
for p, v in sorted(t.coeffs.items(), reverse=True):
    print(f"  {p}: {v.real:+.4f}")

x = (0.5, -2.0)
print(f"\nF{x} =", evaluate(f, x).real)

beta = (1.0, 2.0)
ell = LinearForm(beta)
power = veronese(ell, 3)
print("\nveronese image of beta =", beta, "is", render_quantic(power))
print("<F, L^3>      =", apolar_form(f, power).real)
print("F(beta)       =", evaluate(f, beta).real)

rng = np.random.default_rng(7)
worst = 0.0
for _ in range(500):
    coeffs = {p: complex(rng.normal(), rng.normal()) for p in enumerate_exponents(3, 3)}
    g = tensor_to_quantic(SymmetricTensor(3, 3, coeffs))
    b = tuple(complex(rng.normal(), rng.normal()) for _ in range(3))
    worst = max(worst, abs(apolar_form(g, veronese(LinearForm(b), 3)) - evaluate(g, b)))
print(f"\nreproducing identity over 500 random cubics in 3 variables: "
      f"worst deviation {worst:.2e}")
