# coding: utf-8

# # Rauzy graphs
#
# R_k has the factors of length k as vertices and those of length k + 1 as edges.
# R_{k+1} is the line digraph of R_k with the obstruction edges removed.

# In[1]:

from cogrowth.digraph import entropy_regulator, is_cycle, strongly_connected
from cogrowth.factors import extract_factors
from cogrowth.obstructions import minimal_forbidden
from cogrowth.rauzy import build_rauzy, check_evolution
from cogrowth.words import FIBONACCI

fl = extract_factors(FIBONACCI, 16)
obs = minimal_forbidden(fl, 16)
for k in range(1, 8):
    g = build_rauzy(fl, k).graph
    print(k, len(g.vertices), g.n_edges, strongly_connected(g), is_cycle(g), entropy_regulator(g))


# In[2]:

for k in range(0, 8):
    report = check_evolution(fl, obs, k)
    print(report.k, report.isomorphic, report.deleted)


# In[3]:

print(build_rauzy(fl, 3).graph.to_dot(name="R3"))
