"""Zero-Bloch axis policies on cat states.

Every qubit of a cat state has a vanishing Bloch vector, so no preferred z
axis is singled out and the detection value depends on the axis choice. Any
choice is sound (each one is a legitimate preferred basis), so the search
policy simply reports the best lower bound it finds.
"""
from entmon import ZeroPolicy, exclusion_report, m_pb, make_ghz

for n in (3, 4, 5):
    g = make_ghz(n)
    canonical = m_pb(g, ZeroPolicy.canonical())
    along_x = m_pb(g, ZeroPolicy.fixed_axis([1, 0, 0]))
    searched = m_pb(g, ZeroPolicy.maximize(samples=64, seed=0))
    print(f"cat state on {n} qubits:")
    print(f"  canonical axes:        {canonical:.9f}   (z stays z; in-plane correlations vanish)")
    print(f"  every z along x:       {along_x:.9f}   (zz correlations turn fully in-plane)")
    print(f"  searched (64 samples): {searched:.9f}")
    report = exclusion_report(g, ZeroPolicy.maximize(samples=64, seed=0))
    verdict = "genuinely multipartite" if report.genuine_multipartite else "no claim"
    print(f"  verdict under search:  {verdict} "
          f"(threshold {report.genuine_threshold:g}, value {report.m_pb:.6f})")
    print()

print("The canonical policy never manufactures a claim: a cat state looks")
print("silent there, while the axis search certifies its entanglement.")
