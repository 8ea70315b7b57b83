# Graphs, circulants, twins, co-twins, automorphisms and symmetry parameters
