# Verification module initialization
