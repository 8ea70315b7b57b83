# Utils package for Circulant Symmetry Toolkit
