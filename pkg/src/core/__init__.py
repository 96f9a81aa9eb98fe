"""
Core grtab modules: tableaux, monomials, Plucker ring, characters and cluster seeds.
"""
