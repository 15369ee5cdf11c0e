# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.matrep.representation import (MatrixRepresentation, ut_natural, t_natural,
                                                units_of_scalar_plus_nilpotent, permutation_matrix,
                                                permutation_representation, full_hom_basis, triangular_product,
                                                is_invariant_block, restrict_block)
from varkit.tasks.matrep.closure import FiniteGroupTable, group_closure, represent, kernel_elements
from varkit.tasks.matrep.envelope import enveloping_algebra, augmentation_image, aug_image_nilpotency
from varkit.tasks.matrep.identities import (Witness, representation_kernel, find_action_witness,
                                            check_action_identity, find_polynomial_witness,
                                            check_polynomial_identity, format_witness)
from varkit.tasks.matrep.sampling import random_scalar_plus_nilpotent, word_image, sample_nonidentity_image
from varkit.tasks.matrep.rep_file import (read_representation, read_algebra, file_kind, format_representation,
                                          format_algebra, write_representation, parse_matrix, parse_cycles)
