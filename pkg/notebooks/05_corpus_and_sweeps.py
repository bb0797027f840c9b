# %% [markdown]
# # Corpus verification and subgroup sweeps
#
# The curated corpus pins expected defects and forms. A sweep classifies
# every subgroup of S_n and reports any group that breaks a structural check.

# %%
from collections import Counter

from dgroups.harness import corpus, sweep, verify_corpus

rep = verify_corpus()
print(len(rep.entries), "entries,", len(rep.violations), "violations, exit code", rep.exit_code)
for row in rep.entries[:6]:
    print(f"{row['name']:<8} defect {row['defect']}  {row['verdict']}")

# %%
s5 = sweep(5)
print(s5.universe, s5.subgroup_count, "subgroups, defect histogram", s5.defect_histogram)
forms = Counter()
for row in s5.summary:
    forms[row["verdict"]] += row["count"]
print(dict(sorted(forms.items())))

# %% [markdown]
# ## A deliberately wrong expectation
#
# Claiming Q8 has defect 0 yields exactly one mismatch.

# %%
from dataclasses import replace

bad = [replace(e, expected_defect=0) if e.name == "Q8" else e for e in corpus()]
print(verify_corpus(bad).violations)
