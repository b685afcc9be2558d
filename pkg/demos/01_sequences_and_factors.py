# coding: utf-8

# # Sequences and their factors
#
# A sequence is given finitely: a morphism with a seed letter, a periodic word, or an
# explicit prefix. Factors are counted from a suffix automaton over a long enough prefix.

# In[1]:

from cogrowth.factors import extract_factors
from cogrowth.words import FIBONACCI, THUE_MORSE, builtin_spec, expand_prefix

print(expand_prefix(FIBONACCI, 34))
print(expand_prefix(THUE_MORSE, 32))


# The Fibonacci word is Sturmian, so it has exactly k + 1 factors of each length k.

# In[2]:

fib = extract_factors(FIBONACCI, 20)
print([fib.complexity(k) for k in range(21)])
print(fib.certified, fib.prefix_len)


# Thue-Morse grows faster, and a periodic word stops growing once k reaches its period.

# In[3]:

tm = extract_factors(THUE_MORSE, 20)
per = extract_factors(builtin_spec("periodic:aab"), 10)
print([tm.complexity(k) for k in range(21)])
print([per.complexity(k) for k in range(11)])


# In[4]:

print(fib.stratum(4))
print("abaab" in fib, "bb" in fib)
