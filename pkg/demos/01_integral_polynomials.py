"""
Integral-valued polynomials.

A rational polynomial can take integer values at every integer without
having integer coefficients. x(x-1)/2 is the standard example. Its forward
differences at zero are all integers, and that finite list certifies the
property for every integer argument.
"""

from latticefn import (IntegralPolynomial, decode_natural, encode_polynomial,
                       encode_sequence, is_integral_valued)

p = IntegralPolynomial.from_strings("0,-1/2,1/2")
ok, cert = is_integral_valued(p)
print("P(x) = x(x-1)/2")
print("  values at -3..3:", [int(p(n)) for n in range(-3, 4)])
print("  differences at 0:", [str(d) for d in cert], "->", "integral" if ok else "not integral")

q = IntegralPolynomial.from_strings("0,1/2")
ok, cert = is_integral_valued(q)
print("Q(x) = x/2")
print("  differences at 0:", [str(d) for d in cert], "->", "integral" if ok else "not integral")

# every canonical sequence of naturals gets its own number
for seq in [(0,), (1,), (2, 1), (0, 0, 1)]:
    n = encode_sequence(seq)
    print(f"  sequence {seq} <-> {n} <-> {decode_natural(n)}")
print("  code of P:", encode_polynomial(p))
