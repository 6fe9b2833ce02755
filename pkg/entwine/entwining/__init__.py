from .entwining import (AXIOMS, Entwining, failed_axioms, swap_entwining, verify_entwining,
                        verify_entwining_morphism)
from .entwined_module import (EntwinedModule, EntwinedMorphism, adjunction_counit,
                              adjunction_unit, comodule_tensor_hX, entwined_kernel_cokernel,
                              forget, generator_morphism, is_entwined_morphism, module_tensor_C,
                              psi_morphism, tensor_C_morphism, verify_entwined_module,
                              verify_triangle_identities)
from .doi_hopf import CoHCategory, doi_hopf_entwining, verify_coh_category

__all__ = ['AXIOMS', 'Entwining', 'failed_axioms', 'swap_entwining', 'verify_entwining',
           'verify_entwining_morphism', 'EntwinedModule', 'EntwinedMorphism', 'adjunction_counit',
           'adjunction_unit', 'comodule_tensor_hX', 'entwined_kernel_cokernel', 'forget',
           'generator_morphism', 'is_entwined_morphism', 'module_tensor_C', 'psi_morphism',
           'tensor_C_morphism', 'verify_entwined_module', 'verify_triangle_identities',
           'CoHCategory', 'doi_hopf_entwining', 'verify_coh_category']
