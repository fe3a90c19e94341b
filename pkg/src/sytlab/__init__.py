"""Exact enumeration of standard Young tableaux.

Shapes, an order-ideal counting oracle, closed-form formulas, jeu de taquin
and Robinson-Schensted, hook-length bijections, q-analogues, rim hook
tableaux and reduced words.
"""

__version__ = "0.1.0"
