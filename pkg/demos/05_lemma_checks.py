# coding: utf-8

# # Checking the lemmas on random digraphs
#
# Every checker returns a report with passes, violations and per-graph rows.
# A violation stores the graph and a witness so it can be replayed.

# In[1]:

from cogrowth import verify

for report in (verify.run_lemma_evol(count=100),
               verify.run_lemma_del_edge(count=100),
               verify.run_good_path(count=20)):
    print(report.lemma, report.passes, len(report.violations))


# The main lemma iterates the line digraph 3L times, so keep the graphs small.

# In[2]:

main = verify.run_main_lemma(count=10)
print(main.passes, len(main.violations))
print(main.rows[0])


# Corollary bound on Rauzy graphs and Proposition-style checks on the sequences.

# In[3]:

from cogrowth.words import FIBONACCI, THUE_MORSE

for spec in (FIBONACCI, THUE_MORSE):
    rep = verify.check_corollary_er(spec, range(1, 13))
    print(spec.name, rep.ok, [(r["n"], r["er"], r["bound"]) for r in rep.rows[:6]])
print(verify.run_proposition1(FIBONACCI, range(1, 11)).ok)
