# Calculus module initialization
