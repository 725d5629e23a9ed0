"""Smoke test for the su2discord extension module."""

import math

import su2discord as sd

singlet = sd.State(1, 1.0)
r = singlet.report()
assert abs(r.discord - 1.0) < 1e-10, r
assert abs(r.eof - 1.0) < 1e-10, r
assert abs(r.negativity - 0.5) < 1e-10, r
assert abs(r.mutual - 2.0) < 1e-10, r

rho = singlet.density_matrix()
assert len(rho) == 4 and all(len(row) == 4 for row in rho)
assert abs(sum(rho[i][i] for i in range(4)) - 1) < 1e-12
assert len(sd.State(3, 0.2).density_matrix("total")) == 8

f_d = sd.discord_zero_point(9)
assert abs(f_d - 0.45) < 1e-15
assert abs(sd.quantum_discord(9, f_d)) < 1e-10
assert abs(sd.separability_threshold(1) - 0.5) < 1e-15

for two_j, f in [(1, 0.7), (3, 0.9), (4, 0.05)]:
    closed = sd.quantum_discord(two_j, f)
    numeric = sd.numeric_discord(two_j, f, n_theta=16)
    assert abs(closed - numeric) < 1e-8, (two_j, f, closed, numeric)

spec = sd.State(2, 0.3).post_measurement_spectrum()
assert len(spec) == 3 and math.isclose(sum(spec), 1.0)

try:
    sd.State(0, 0.5)
except ValueError:
    pass
else:
    raise AssertionError("2j = 0 accepted")

print("su2discord smoke test passed:", r)
