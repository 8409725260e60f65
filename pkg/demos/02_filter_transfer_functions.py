"""Magnitude responses of the smoothing and detail filters.

For q = 5 and orders 1, 5, 15: plots |H(w)| and |G(w)|, prints the exact
endpoint values and the zero counts (the order nu picks the number of
zeros of |H| per period, which is the design knob of this family).
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mathieu_wavelets import (
    transfer_G,
    transfer_G_values,
    transfer_H,
    transfer_H_values,
    transfer_zero_count,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

q = 5.0
w = np.linspace(-np.pi, np.pi, 4097)
fig, axes = plt.subplots(3, 1, figsize=(7, 8), sharex=True)

for ax, nu in zip(axes, (1, 5, 15)):
    H = np.abs(transfer_H_values(nu, q, w))
    G = np.abs(transfer_G_values(nu, q, w))
    ax.plot(w, H, lw=1.0, label="|H|")
    ax.plot(w, G, lw=1.0, ls="--", label="|G|")
    ax.set_ylabel(f"nu={nu}")
    ax.legend(loc="upper right", fontsize=8)
    print(f"nu={nu}: |H(0)|={abs(transfer_H(nu, q, 0.0).value):.12f}  "
          f"|H(pi)|={abs(transfer_H(nu, q, np.pi).value):.2e}  "
          f"|G(0)|={abs(transfer_G(nu, q, 0.0).value):.2e}  "
          f"|G(pi)|={abs(transfer_G(nu, q, np.pi).value):.12f}  "
          f"zeros of |H| per period: {transfer_zero_count(nu, q)}")

axes[-1].set_xlabel("w")
fig.suptitle(f"Transfer-function magnitudes, q={q:g} (lowpass H, highpass G)")
fig.tight_layout()
fig.savefig(OUT / "transfer_magnitudes.png", dpi=150)
print(f"wrote {OUT}/transfer_magnitudes.png")
