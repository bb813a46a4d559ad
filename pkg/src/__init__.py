"""
Adelic Curves - exact adeles, de Rham cohomology and Deligne-Illusie checks on curves
"""

__version__ = "1.0.0"
__author__ = "Adelic Curves Team"
__description__ = "Beilinson adeles, residue pairings and the Cartier operator on P1 and hyperelliptic curves"
