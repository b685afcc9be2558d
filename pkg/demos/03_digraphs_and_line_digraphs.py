# coding: utf-8

# # Line digraphs and the entropy regulator
#
# The entropy regulator er(G) measures the longest path among vertices with a single
# out-edge. It is infinite when those vertices carry a cycle.

# In[1]:

from cogrowth.digraph import Digraph, entropy_regulator, forks, iterate_line_digraph, line_digraph

three_cycle_with_chord = Digraph.from_edges([(0, 1), (1, 2), (2, 0), (0, 2)])
print(sorted(forks(three_cycle_with_chord)), entropy_regulator(three_cycle_with_chord))


# Taking the line digraph preserves er.

# In[2]:

h, _, _ = line_digraph(three_cycle_with_chord)
print(len(h.vertices), h.n_edges, entropy_regulator(h))


# Iterated line digraphs of the bouquet of two loops double at every step.

# In[3]:

two_loops = Digraph.from_edges([(0, 0), (0, 0)])
for m in range(1, 5):
    it = iterate_line_digraph(two_loops, m)
    print(m, len(it.graph.vertices), it.graph.n_edges)


# In[4]:

print(three_cycle_with_chord.to_dot(name="H"))
