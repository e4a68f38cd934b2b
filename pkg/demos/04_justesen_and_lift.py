# Degree-2 Justesen codes over F_9 and F_11 and their palindromic lifts.
from convmds import free_distance, justesen_rate_half, lifted_justesen, make_field, primitive_elements
from convmds.constructions import justesen_rows

for F in (make_field(11), make_field(3, 2)):
    for alpha in primitive_elements(F):
        base = justesen_rate_half(F, alpha)
        rows = [[x.rep for x in r] for r in justesen_rows(base)]
        lifted = free_distance(lifted_justesen(F, alpha))
        print(f"q={F.q:2} alpha={alpha.rep}: rows {rows}  d_free {free_distance(base).d_free}/6  "
              f"lifted {lifted.d_free}/{lifted.bound}")
