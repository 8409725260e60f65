"""How usable are the truncated banks in an actual transform?

Sweeps the elliptic parameter and reports the QMF deviation of the closed
forms together with the worst periodic-DWT round-trip error.  At q = 0 the
bank is exactly Haar and reconstruction is exact; the quality then decays
with q, which quantifies how far the family is from an orthogonal design.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mathieu_wavelets import filter_bank, qmf_deviation, round_trip_error

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

qs = np.array([0.0, 1e-4, 1e-3, 1e-2, 1e-1, 0.5, 1.0, 2.0, 5.0])
devs, errs = [], []

print(f"{'q':>8} {'taps':>5} {'qmf_deviation':>15} {'round_trip_error':>17}")
for q in qs:
    bank = filter_bank(1, float(q), 1e-10)
    dev = qmf_deviation(bank)
    err = round_trip_error(bank, 256, 3, 10)
    devs.append(dev)
    errs.append(err)
    print(f"{q:>8g} {int(np.count_nonzero(bank.h.values)):>5} {dev:>15.6e} {err:>17.6e}")

fig, ax = plt.subplots(figsize=(6.5, 4.5))
positive = qs > 0
ax.loglog(qs[positive], np.array(devs)[positive], "o-", label="QMF deviation")
ax.loglog(qs[positive], np.array(errs)[positive], "s--", label="round-trip error (256, 3 levels)")
ax.set_xlabel("q")
ax.set_ylabel("measured deviation")
ax.legend()
ax.grid(True, which="both", lw=0.3)
fig.suptitle("Reconstruction quality of order-1 banks versus q")
fig.tight_layout()
fig.savefig(OUT / "dwt_quality.png", dpi=150)
print(f"wrote {OUT}/dwt_quality.png")
