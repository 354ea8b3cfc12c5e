# coding: utf-8

# # Ordering systems
#
# `a ⪯ b` means a tolerates at least as many worst-case failures as b. It is
# a total preorder: different systems can share a value.

# In[1]:

from ftalgebra import Metric, leq, parse

pairs = [("A", "2A"), ("A^2", "A"), ("2A^3", "3A^2"), ("0", "A"), ("A", "1")]
for a, b in pairs:
    print(f"{a:>5} ⪯ {b:<5}  {leq(parse(a), parse(b))}")


# # Running laws on generated instances
#
# Each law samples instances that satisfy its hypothesis, so few checks are
# vacuous.

# In[2]:

from ftalgebra import GenConfig
from ftalgebra.order import ORDER_LAWS, run_law

config = GenConfig(seed=4)
for law_id in list(ORDER_LAWS)[:8]:
    s = run_law(law_id, Metric.WORST, config, 500)
    print(f"{law_id:<18} {s.violations} violations, {s.vacuous} vacuous")


# # The best-case metric breaks products
#
# X and 2X both have best case 0, yet X*Y absorbs one failure while 2X*Y
# absorbs two.

# In[3]:

from ftalgebra.order import check_law, find_counterexample

r = check_law("monotony_mul", (parse("X"), parse("2X"), parse("Y")), Metric.BEST)
print(r.holds)
print(r.to_dict()["clauses"][0]["conclusion"])

found = find_counterexample("monotony_mul", Metric.BEST, config)
print("first random counterexample at index", found.index)
