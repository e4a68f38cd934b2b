# Polynomials over F_11: the Justesen generator and the factor 1 + D.
from convmds import Poly, make_field, poly_from_roots, poly_gcd, poly_scale_arg

F11 = make_field(11)
g = poly_from_roots([F11(2), F11(4)])  # (x - 2)(x - 4)
print("g         =", g)
print("g(10 x)   =", poly_scale_arg(g, F11(10)))

one_plus_d = Poly(F11, [1, 1])
print("(1+D)(1-D+D^2-D^3+D^4) =", one_plus_d * Poly(F11, [1, 10, 1, 10, 1]))

# both palindromic entries share the root D = -1
g1 = Poly(F11, [8, 5, 1, 1, 5, 8])
g2 = Poly(F11, [8, 6, 1, 1, 6, 8])
print("g1(-1), g2(-1) =", g1(10), g2(10))
print("gcd =", poly_gcd(g1, g2))
