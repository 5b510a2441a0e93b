"""
splitbasis: splitting bases for the homology of partition lattices.

Builds partition lattices of types A, B, D and the interpolating families
DB(T) and A(T), constructs the splitting cycles attached to (signed)
permutations, and certifies with exact integer arithmetic that the selected
cycles form a ℤ-basis of top reduced homology. The geometric side (Coxeter
arrangements, bounded regions of a generic slice) is verified independently.
"""

__version__ = "0.1.0"
