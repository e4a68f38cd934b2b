# Minimum weight of the first six output blocks over all 10 * 11^5 prefixes.
import time

from convmds import theorem3_code, window_min_weight

code = theorem3_code()
for length in range(6):
    t0 = time.perf_counter()
    w, prefix = window_min_weight(code, length)
    print(f"v_0..v_{length}: min weight {w}  prefix {[x.value for x in prefix]}  ({time.perf_counter() - t0:.2f}s)")
