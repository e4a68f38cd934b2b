# Free distance of the degree-5 palindrome code over F_11, and where it falls short.
import time

from convmds import brute_force_min_weight, codeword_weight, free_distance, is_catastrophic, singleton_bound, theorem3_code

code = theorem3_code()
print(code, "Singleton bound", singleton_bound(code.n, code.k, code.degree))

t0 = time.perf_counter()
r = free_distance(code)
print(f"d_free = {r.d_free} (bound {r.bound}) in {time.perf_counter() - t0:.1f}s")
print("witness input:", r.witness_input)
for i in range(r.witness_input.degree + code.degree + 1):
    print(f"  v_{i} =", [v.coeff(i).value for v in r.witness_codeword])
print("weight", codeword_weight(r.witness_codeword))

# the enumeration oracle agrees once inputs of degree 4 are allowed
for deg in range(5):
    print("deg u <=", deg, "->", brute_force_min_weight(code, deg)[0])

cat = is_catastrophic(code)
print("catastrophic:", cat.is_catastrophic, "minor gcd", cat.minor_gcd)
