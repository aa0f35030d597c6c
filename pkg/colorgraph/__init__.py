"""
Colorgraph
==========
Coloured edge graphs of finite idempotent algebras, structural audits on
concrete algebras and relations, compact subpower representations, and a
bounded-width CSP solver built on (2,3)-minimality.
"""

__version__ = "1.0.0"
