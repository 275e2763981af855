"""Spectrum and shell structure of the charge-dyon bound system.

The monopole number s shifts the ground shell up to n = |s| + 1 and
removes s^2 states from every shell: the degeneracy is n^2 - s^2
instead of hydrogen's n^2.  With half-integer s the principal level
itself is half-integer.

Run:  python demos/01_spectrum_and_shells.py
"""

from dyonstark import (
    PhysicalParams,
    energy_level,
    enumerate_shell_parabolic,
    enumerate_shell_spherical,
    half,
)

for s_raw in ("0", "1/2", "1", "3/2"):
    s = half(s_raw)
    params = PhysicalParams.atomic(s)
    print(f"\nmonopole number s = {s}  (ground shell n = {abs(s) + 1})")
    print(f"{'n':>5} {'E0':>14} {'spherical':>10} {'parabolic':>10} {'n^2-s^2':>8}")
    n = abs(s) + 1
    for _ in range(4):
        sph = enumerate_shell_spherical(n, s)
        par = enumerate_shell_parabolic(n, s)
        expected = (n.twice**2 - s.twice**2) // 4
        print(
            f"{str(n):>5} {energy_level(n, params):>14.10f} "
            f"{len(sph):>10} {len(par):>10} {expected:>8}"
        )
        n = n + 1

# the two bases label the same shell: spot-check the n = 2, s = 1 shell
print("\nshell n=2, s=1, spherical labels (j, m):")
print("  ", [(str(st.j), str(st.m)) for st in enumerate_shell_spherical(2, 1)])
print("shell n=2, s=1, parabolic labels (n1, n2, m):")
print("  ", [(st.n1, st.n2, str(st.m)) for st in enumerate_shell_parabolic(2, 1)])
