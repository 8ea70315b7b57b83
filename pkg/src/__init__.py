# Circulant Symmetry Toolkit - Source Package
