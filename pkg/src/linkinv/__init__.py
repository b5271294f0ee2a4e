"""Exact link invariants from braid words.

Computes Jones polynomials (Kauffman bracket), Seifert forms with
signature/nullity/sign data, Lescop's surgery formula, and the induced
invariants of double branched covers, all in exact rational arithmetic.
"""

__version__ = "0.1.0"
