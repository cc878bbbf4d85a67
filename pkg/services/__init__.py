"""Computational kernel for torus-monodromy.

Modules: lattice, mcg, factorization, markov, classifier, auroux, fuzz.
"""

import sys

# Pairings of deeply scrambled factorizations run past CPython's default
# limit of 4300 decimal digits for int <-> str conversion.
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)
