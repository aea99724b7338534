"""Two synchronized dipoles: classical coherence only.

Both atoms sit in the same superposition sqrt(a2)|g> + sqrt(1-a2)|e>.
The product state carries a genuine collective dipole moment (peaking at
a2 = 1/2) and shows Young-type fringes with visibility a2 — but its
concurrence and discord vanish identically: the interference is classical.

Counterintuitively the contrast is best where the dipole is weakest
(a2 -> 1), because the incoherent doubly-excited background dies faster
than the interfering terms.

Run:  python demos/synchronized_dipoles.py
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from twoatom import g1, product_curve, product_state

OUTPUT_DIR = os.path.join(os.path.dirname(__file__), "output")


def main():
    os.makedirs(OUTPUT_DIR, exist_ok=True)

    table = product_curve(np.linspace(0.0, 1.0, 201))
    alpha2 = table.parameters()

    print("Product-state family: visibility vs. dipole moment")
    print(f"{'alpha^2':>8} {'visibility':>11} {'dipole':>8} {'concurrence':>12} {'discord':>9}")
    for a2 in (0.0, 0.25, 0.5, 0.75, 0.9, 1.0):
        row = dict(table.rows[int(round(a2 * 200))][1])
        vis = "  (dark)" if np.isnan(row["visibility"]) else f"{row['visibility']:8.4f}"
        print(
            f"{a2:8.2f} {vis:>11} {row['dipole']:8.4f} "
            f"{row['concurrence']:12.2e} {row['discord']:9.2e}"
        )

    print("\nEvery row has zero concurrence and zero discord: whatever fringes")
    print("appear are driven by the classical dipole coefficient alone.")
    print("Note the dipole peaks at alpha^2 = 1/2 while the visibility keeps")
    print("climbing toward the dark alpha^2 = 1 limit.")

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4))
    left.plot(alpha2, table.column("visibility"), "k:", lw=2, label="visibility")
    left.plot(alpha2, table.column("dipole"), "b-", lw=2, label="dipole coefficient")
    left.set_xlabel(r"ground population $\alpha^2$")
    left.set_title("Classical coherence of two synchronized dipoles")
    left.legend()
    left.grid(alpha=0.3)

    deltas = np.linspace(-2 * np.pi, 2 * np.pi, 721)
    for a2 in (0.3, 0.6, 0.9):
        right.plot(deltas, g1(product_state(a2), deltas), lw=1.5, label=rf"$\alpha^2$ = {a2}")
    right.set_xlabel(r"optical phase $\delta$")
    right.set_ylabel("intensity")
    right.set_title("Fringes brighten and flatten together")
    right.legend()
    right.grid(alpha=0.3)

    fig.tight_layout()
    target = os.path.join(OUTPUT_DIR, "synchronized_dipoles.png")
    fig.savefig(target, dpi=150)
    print(f"\nSaved {target}")


if __name__ == "__main__":
    main()
