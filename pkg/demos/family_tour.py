"""The named graph families and their closed-form counts.

Every family has a compact text spec (also accepted by the CLI), a
deterministic construction, and, where one exists, a closed form that
the oracle confirms.

Run:  python demos/family_tour.py
"""

from connsets import (
    build,
    closed_form,
    e_graph_reference,
    oracle_count,
    oracle_count_rooted,
    parse_family_spec,
    to_graph6,
)

print("=" * 72)
print("Family constructors")
print("=" * 72)
for text in (
    "path:6",
    "cycle:6",
    "star:6",
    "tadpole:6",
    "typeII:3,4",
    "dumbbell:3,4,2",
    "theta:2,3,4",
    "L:8",
    "A:8",
    "B:8",
    "R:8",
    "Q:8",
):
    spec = parse_family_spec(text)
    g = build(spec)
    formula = closed_form(spec)
    total = oracle_count(g).total
    shown = f"{formula}" if formula is not None else f"{total} (no closed form)"
    flag = "" if formula is None or formula == total else "  MISMATCH!"
    print(f"  {str(spec):<16} n={g.n:<3} e={g.edge_count:<3} "
          f"graph6={to_graph6(g):<12} N={shown}{flag}")

print("""
Closed forms at a glance:
  path       n(n+1)/2
  cycle      n^2 - n + 1
  star       2^(n-1) + n - 1
  tadpole    (m-1)(m+4)/2
  L          (n+6)(n-1)/2     the minimiser among bicyclic graphs
  A          (n^2+7n-16)/2    ties L at n=5, loses by n-5 after that
  B          n + 2 + 2^(n-1)  the maximiser among bicyclic graphs
  R          n + 1 + 2^(n-1)  exactly one below B, the runner-up bound
""")

print("=" * 72)
print("Two families that differ by exactly one connected set")
print("=" * 72)
for n in range(6, 13):
    b = closed_form(parse_family_spec(f"B:{n}"))
    r = closed_form(parse_family_spec(f"R:{n}"))
    print(f"  n={n:<3} N(B)={b:<6} N(R)={r:<6} difference={b - r}")

print("=" * 72)
print("The seven small theta graphs (reference table)")
print("=" * 72)
print(f"  {'name':<6} {'N':>5} {'max rooted':>11} {'bound':>6}")
for name, (total, bound) in e_graph_reference():
    g = build(parse_family_spec(name))
    rooted = max(oracle_count_rooted(g, v).value for v in range(g.n))
    print(f"  {name:<6} {oracle_count(g).total:>5} {rooted:>11} {bound:>6}")
