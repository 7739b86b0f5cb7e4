# Pluggable solver, reduction and generator components
