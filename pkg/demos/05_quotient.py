# coding: utf-8

# # Classes of equally tolerant systems
#
# Grouping systems by worst-case tolerance gives a small algebra on labels:
# series takes the minimum, parallel adds and then adds one.

# In[1]:

from ftalgebra import Metric, parse
from ftalgebra.quotient import class_of, class_prod, class_sum, representative

a, b = parse("2B^3"), parse("C^2 + D")
ca, cb = class_of(a), class_of(b)
print(ca, cb)
print("sum:", class_sum(ca, cb), "=", class_of(a + b))
print("product:", class_prod(ca, cb), "=", class_of(a * b))
print("representative of", ca, "is", representative(ca))


# # Label laws
#
# The label operations can be checked exhaustively on a finite range.

# In[2]:

from ftalgebra.quotient import check_label_laws

for r in check_label_laws():
    print(f"{r.law_id:<24} {r.cases:>6} cases  {r.violations} violations")


# Under the best-case metric only the sum survives.

# In[3]:

try:
    class_prod(class_of(a, Metric.BEST), class_of(b, Metric.BEST))
except ValueError as err:
    print("error:", err)
