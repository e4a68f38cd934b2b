# Sweep the (a, b) family over F_11: catastrophic members and MDS members.
from convmds.cli import ab_sweep, sweep_summary

rows = ab_sweep(workers=0)
s = sweep_summary(rows)
print("catastrophic besides (1,1):", s["catastrophic_pairs"])
print("noncatastrophic:", s["noncatastrophic_count"], " MDS among them:", s["mds_hits"])
print("degree 5, noncatastrophic, MDS:", s["mds_noncatastrophic_delta5_pairs"])
