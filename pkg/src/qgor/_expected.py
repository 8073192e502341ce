"""Frozen expected values for the fixture corpus.

Generated by tools/freeze_expected.py from the independent
brute-force oracle; do not edit by hand.  Per-field maps use
the key "*" when the value is the same over Q, GF(2), GF(3).
"""

EXPECTED = \
{'boundary-2-simplex': {'a_invariant': {'*': 0},
                        'betti': {'*': {1: 1}},
                        'depth': {'*': 2},
                        'flags': {'*': {'buchsbaum': True,
                                        'cohen_macaulay': True,
                                        'gorenstein': True,
                                        'homology_manifold': True,
                                        'homology_sphere': True,
                                        'normal': True,
                                        'normal_pseudomanifold': True,
                                        'orientable': True,
                                        'pseudomanifold_ridge_condition': True,
                                        'pure': True,
                                        'quasi_gorenstein': True,
                                        'strongly_connected': True}}},
 'boundary-3-simplex': {'a_invariant': {'*': 0},
                        'betti': {'*': {2: 1}},
                        'depth': {'*': 3},
                        'flags': {'*': {'buchsbaum': True,
                                        'cohen_macaulay': True,
                                        'gorenstein': True,
                                        'homology_manifold': True,
                                        'homology_sphere': True,
                                        'normal': True,
                                        'normal_pseudomanifold': True,
                                        'orientable': True,
                                        'pseudomanifold_ridge_condition': True,
                                        'pure': True,
                                        'quasi_gorenstein': True,
                                        'strongly_connected': True}}},
 'boundary-4-simplex': {'a_invariant': {'*': 0},
                        'betti': {'*': {3: 1}},
                        'depth': {'*': 4},
                        'flags': {'*': {'buchsbaum': True,
                                        'cohen_macaulay': True,
                                        'gorenstein': True,
                                        'homology_manifold': True,
                                        'homology_sphere': True,
                                        'normal': True,
                                        'normal_pseudomanifold': True,
                                        'orientable': True,
                                        'pseudomanifold_ridge_condition': True,
                                        'pure': True,
                                        'quasi_gorenstein': True,
                                        'strongly_connected': True}}},
 'cone-four-cycle': {'a_invariant': {'*': -1},
                     'betti': {'*': {}},
                     'depth': {'*': 3},
                     'flags': {'*': {'buchsbaum': True,
                                     'cohen_macaulay': True,
                                     'gorenstein': True,
                                     'homology_manifold': False,
                                     'homology_sphere': False,
                                     'normal': True,
                                     'normal_pseudomanifold': False,
                                     'orientable': False,
                                     'pseudomanifold_ridge_condition': False,
                                     'pure': True,
                                     'quasi_gorenstein': False,
                                     'strongly_connected': True}}},
 'csaszar-torus': {'a_invariant': {'*': 0},
                   'betti': {'*': {1: 2, 2: 1}},
                   'depth': {'*': 2},
                   'flags': {'*': {'buchsbaum': True,
                                   'cohen_macaulay': False,
                                   'gorenstein': False,
                                   'homology_manifold': True,
                                   'homology_sphere': False,
                                   'normal': True,
                                   'normal_pseudomanifold': True,
                                   'orientable': True,
                                   'pseudomanifold_ridge_condition': True,
                                   'pure': True,
                                   'quasi_gorenstein': True,
                                   'strongly_connected': True}}},
 'four-cycle': {'a_invariant': {'*': 0},
                'betti': {'*': {1: 1}},
                'depth': {'*': 2},
                'flags': {'*': {'buchsbaum': True,
                                'cohen_macaulay': True,
                                'gorenstein': True,
                                'homology_manifold': True,
                                'homology_sphere': True,
                                'normal': True,
                                'normal_pseudomanifold': True,
                                'orientable': True,
                                'pseudomanifold_ridge_condition': True,
                                'pure': True,
                                'quasi_gorenstein': True,
                                'strongly_connected': True}}},
 'full-simplex-1': {'a_invariant': {'*': -1},
                    'betti': {'*': {}},
                    'depth': {'*': 1},
                    'flags': {'*': {'buchsbaum': True,
                                    'cohen_macaulay': True,
                                    'gorenstein': True,
                                    'homology_manifold': True,
                                    'homology_sphere': False,
                                    'normal': True,
                                    'normal_pseudomanifold': False,
                                    'orientable': False,
                                    'pseudomanifold_ridge_condition': False,
                                    'pure': True,
                                    'quasi_gorenstein': False,
                                    'strongly_connected': True}}},
 'full-simplex-3': {'a_invariant': {'*': -3},
                    'betti': {'*': {}},
                    'depth': {'*': 3},
                    'flags': {'*': {'buchsbaum': True,
                                    'cohen_macaulay': True,
                                    'gorenstein': True,
                                    'homology_manifold': False,
                                    'homology_sphere': False,
                                    'normal': True,
                                    'normal_pseudomanifold': False,
                                    'orientable': False,
                                    'pseudomanifold_ridge_condition': False,
                                    'pure': True,
                                    'quasi_gorenstein': False,
                                    'strongly_connected': True}}},
 'paper-cex1': {'a_invariant': {'*': -2},
                'betti': {'*': {}},
                'depth': {'*': 3},
                'flags': {'*': {'buchsbaum': True,
                                'cohen_macaulay': True,
                                'gorenstein': False,
                                'homology_manifold': False,
                                'homology_sphere': False,
                                'normal': True,
                                'normal_pseudomanifold': False,
                                'orientable': False,
                                'pseudomanifold_ridge_condition': False,
                                'pure': True,
                                'quasi_gorenstein': False,
                                'strongly_connected': True}}},
 'paper-cex1-A': {'a_invariant': {'*': -2},
                  'betti': {'*': {}},
                  'depth': {'*': 3},
                  'flags': {'*': {'buchsbaum': True,
                                  'cohen_macaulay': True,
                                  'gorenstein': True,
                                  'homology_manifold': False,
                                  'homology_sphere': False,
                                  'normal': True,
                                  'normal_pseudomanifold': False,
                                  'orientable': False,
                                  'pseudomanifold_ridge_condition': False,
                                  'pure': True,
                                  'quasi_gorenstein': False,
                                  'strongly_connected': True}}},
 'paper-cex2': {'a_invariant': {'*': -1},
                'betti': {'*': {}},
                'depth': {'*': 3},
                'flags': {'*': {'buchsbaum': True,
                                'cohen_macaulay': True,
                                'gorenstein': False,
                                'homology_manifold': False,
                                'homology_sphere': False,
                                'normal': True,
                                'normal_pseudomanifold': False,
                                'orientable': False,
                                'pseudomanifold_ridge_condition': False,
                                'pure': True,
                                'quasi_gorenstein': False,
                                'strongly_connected': True}}},
 'paper-cex2-A': {'a_invariant': {'*': -3},
                  'betti': {'*': {}},
                  'depth': {'*': 2},
                  'flags': {'*': {'buchsbaum': False,
                                  'cohen_macaulay': False,
                                  'gorenstein': False,
                                  'homology_manifold': False,
                                  'homology_sphere': False,
                                  'normal': False,
                                  'normal_pseudomanifold': False,
                                  'orientable': False,
                                  'pseudomanifold_ridge_condition': False,
                                  'pure': True,
                                  'quasi_gorenstein': False,
                                  'strongly_connected': False}}},
 'paper-moebius': {'a_invariant': {'*': -2},
                   'betti': {'*': {1: 1}},
                   'depth': {'*': 2},
                   'flags': {'*': {'buchsbaum': True,
                                   'cohen_macaulay': False,
                                   'gorenstein': False,
                                   'homology_manifold': False,
                                   'homology_sphere': False,
                                   'normal': True,
                                   'normal_pseudomanifold': False,
                                   'orientable': False,
                                   'pseudomanifold_ridge_condition': False,
                                   'pure': True,
                                   'quasi_gorenstein': False,
                                   'strongly_connected': True}}},
 'rp2-6': {'a_invariant': {'2': 0, '3': -1, 'q': -1},
           'betti': {'2': {1: 1, 2: 1}, '3': {}, 'q': {}},
           'depth': {'2': 2, '3': 3, 'q': 3},
           'flags': {'2': {'buchsbaum': True,
                           'cohen_macaulay': False,
                           'gorenstein': False,
                           'homology_manifold': True,
                           'homology_sphere': False,
                           'normal': True,
                           'normal_pseudomanifold': True,
                           'orientable': False,
                           'pseudomanifold_ridge_condition': True,
                           'pure': True,
                           'quasi_gorenstein': True,
                           'strongly_connected': True},
                     '3': {'buchsbaum': True,
                           'cohen_macaulay': True,
                           'gorenstein': False,
                           'homology_manifold': True,
                           'homology_sphere': False,
                           'normal': True,
                           'normal_pseudomanifold': True,
                           'orientable': False,
                           'pseudomanifold_ridge_condition': True,
                           'pure': True,
                           'quasi_gorenstein': False,
                           'strongly_connected': True},
                     'q': {'buchsbaum': True,
                           'cohen_macaulay': True,
                           'gorenstein': False,
                           'homology_manifold': True,
                           'homology_sphere': False,
                           'normal': True,
                           'normal_pseudomanifold': True,
                           'orientable': False,
                           'pseudomanifold_ridge_condition': True,
                           'pure': True,
                           'quasi_gorenstein': False,
                           'strongly_connected': True}}},
 'two-points': {'a_invariant': {'*': 0},
                'betti': {'*': {0: 1}},
                'depth': {'*': 1},
                'flags': {'*': {'buchsbaum': True,
                                'cohen_macaulay': True,
                                'gorenstein': True,
                                'homology_manifold': True,
                                'homology_sphere': True,
                                'normal': True,
                                'normal_pseudomanifold': True,
                                'orientable': True,
                                'pseudomanifold_ridge_condition': True,
                                'pure': True,
                                'quasi_gorenstein': True,
                                'strongly_connected': True}}},
 'two-triangles': {'a_invariant': {'*': -3},
                   'betti': {'*': {0: 1}},
                   'depth': {'*': 1},
                   'flags': {'*': {'buchsbaum': True,
                                   'cohen_macaulay': False,
                                   'gorenstein': False,
                                   'homology_manifold': False,
                                   'homology_sphere': False,
                                   'normal': False,
                                   'normal_pseudomanifold': False,
                                   'orientable': False,
                                   'pseudomanifold_ridge_condition': False,
                                   'pure': True,
                                   'quasi_gorenstein': False,
                                   'strongly_connected': False}}},
 'wedge-triangles': {'a_invariant': {'*': -3},
                     'betti': {'*': {}},
                     'depth': {'*': 2},
                     'flags': {'*': {'buchsbaum': False,
                                     'cohen_macaulay': False,
                                     'gorenstein': False,
                                     'homology_manifold': False,
                                     'homology_sphere': False,
                                     'normal': False,
                                     'normal_pseudomanifold': False,
                                     'orientable': False,
                                     'pseudomanifold_ridge_condition': False,
                                     'pure': True,
                                     'quasi_gorenstein': False,
                                     'strongly_connected': False}}}}
