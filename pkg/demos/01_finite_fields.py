# Arithmetic in F_11 and F_9, the two fields used by the rate-1/2 constructions.
from convmds import element_order, make_field, primitive_elements

F11 = make_field(11)
print(F11(7) + F11(9), F11(3) * F11(4), F11(2) ** -5)  # 5, 1, 10

# primitive elements of F_11 are exactly the ones of order 10
for a in F11.elements()[1:]:
    print(a, "order", element_order(a))
print("primitive:", primitive_elements(F11))

# F_9 = F_3[x]/(x^2 + 1); elements print as coefficient tuples (c0, c1)
F9 = make_field(3, 2)
x = F9((0, 1))
print("modulus", F9.modulus, " x^2 =", x * x)
print("primitive:", primitive_elements(F9))
