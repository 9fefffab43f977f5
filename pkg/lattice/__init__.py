# Lattice module initialization
