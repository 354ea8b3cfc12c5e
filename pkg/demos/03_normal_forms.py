# coding: utf-8

# # Sum of products
#
# Parallel composition distributes over series composition, so every system
# can be flattened to a series chain of parallel groups.

# In[1]:

from ftalgebra import format_expr, iso_equal, parse, phi_best, phi_worst, to_sop

for text in ("A*(B+C)", "(A+B)*(C+D)", "(A + 1)*B", "X^2*(B+C)"):
    print(f"{text:>12}  ->  {format_expr(to_sop(parse(text)))}")


# The flattened form behaves identically for every failure set, and its
# worst-case tolerance is unchanged. It does copy components, though, so the
# best case can move.

# In[2]:

e = parse("X^2*(B+C)")
s = to_sop(e)
print("worst:", phi_worst(e), phi_worst(s))
print("best: ", phi_best(e), phi_best(s))


# Two systems are isomorphic when their flattened forms agree up to order.

# In[3]:

print(iso_equal(parse("A*(B+C)"), parse("C*A + B*A")))
print(iso_equal(parse("A + B"), parse("A * B")))
