# coding: utf-8

# # Checking the recursion by brute force
#
# The closed recursions are cheap, but the definitions are about failure sets.
# With N component instances there are only 2^N such sets, which numpy can
# evaluate in one pass for small N.

# In[1]:

import numpy as np

from ftalgebra import ground, parse
from ftalgebra.oracle import minimal_cut_sets, oracle_phis, popcounts, truth_table

g = ground(parse("A*(B+C)"))
print(g.instance_ids)


# Row s of the table says whether the system is down when exactly the
# instances in bitmask s have failed.

# In[2]:

table = truth_table(g)
sizes = popcounts(g.component_count)
for s in range(len(table)):
    print(f"{s:03b}  |s|={sizes[s]}  down={bool(table[s])}")


# The worst case is one less than the smallest failing set. The best case is
# the largest surviving set.

# In[3]:

print("smallest failing set:", sizes[table].min())
print("largest surviving set:", sizes[~table].max())
print("oracle (best, worst):", [t.label() for t in oracle_phis(g)])
print("minimal cut sets:", [sorted(c) for c in minimal_cut_sets(g)])


# # Agreement on random systems

# In[4]:

from ftalgebra import GenConfig, analyze, generate

config = GenConfig(seed=1, max_depth=4, max_atoms=12)
agree = np.array([
    (lambda e: (analyze(e).phi_best, analyze(e).phi_worst) == oracle_phis(e))(generate(config, i))
    for i in range(300)
])
print(f"{agree.sum()} of {agree.size} agree")
