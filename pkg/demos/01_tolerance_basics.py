# coding: utf-8

# # Fault tolerance of composed systems
#
# A system is built from components with two operators. `A + B` chains two
# systems in series, so it goes down as soon as either part does. `A * B` runs
# them side by side and goes down only when both have failed. `A^3` is three
# copies in parallel and `2A` is two copies in series.

# In[1]:

from ftalgebra import analyze, format_expr, parse

e = parse("(P^3 + 3Q) * 5R^2")
print(format_expr(e))


# Two numbers describe each system. The worst-case tolerance is the largest
# k such that *every* set of k failed components leaves the system running.
# The best-case tolerance is the largest set of failures that *some* choice
# can absorb.

# In[2]:

r = analyze(e)
print(r.components, "components")
print("worst:", r.phi_worst, " best:", r.phi_best)


# # Replicated blocks
#
# For m series copies of an n-way parallel block the two values have a closed
# form: any n-1 failures are harmless, but with luck m(n-1) can be absorbed.

# In[3]:

for m in range(1, 4):
    row = []
    for n in range(1, 5):
        r = analyze(parse(f"{m}A^{n}"))
        row.append(f"{r.phi_worst.label()}/{r.phi_best.label()}")
    print(f"m={m}:", "  ".join(row))


# # The identities
#
# `0` is a system that never fails and `1` one that is always down. Their
# tolerances sit at the ends of the scale.

# In[4]:

for text in ("0", "1", "A + 0", "A * 1", "A * 0"):
    r = analyze(parse(text))
    print(f"{text:>6}:  worst {r.phi_worst.label():>5}   best {r.phi_best.label():>5}")
