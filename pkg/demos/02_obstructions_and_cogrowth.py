# coding: utf-8

# # Minimal forbidden words
#
# A word is an obstruction when it is absent but its two maximal proper subwords
# occur. The cogrowth O(n) counts the obstructions of length at most n.

# In[1]:

import numpy as np

from cogrowth.factors import extract_factors
from cogrowth.obstructions import LOG_PHI, brute_force_minimal_forbidden, cogrowth_profile, minimal_forbidden
from cogrowth.words import FIBONACCI, THUE_MORSE

obs = minimal_forbidden(extract_factors(FIBONACCI, 100), 100)
print(obs.words)


# Fibonacci obstructions only occur at Fibonacci lengths. Compare with the brute force enumerator.

# In[2]:

print(brute_force_minimal_forbidden(FIBONACCI, 8))
print(minimal_forbidden(extract_factors(THUE_MORSE, 12), 12).words)


# Cogrowth against log3(n): the running maximum of the ratio stays bounded.

# In[3]:

rows = cogrowth_profile(FIBONACCI, 1000)
print("running max", rows[-1].running_max)
ns = np.array([r.n for r in rows])
counts = np.array([r.cogrowth for r in rows])
jumps = ns[np.flatnonzero(np.diff(counts, prepend=0))]
print("obstruction lengths", jumps)
print("O(n) / log_phi(n) at those lengths", np.round(counts[jumps - 2] / (np.log(jumps) / LOG_PHI), 3))
