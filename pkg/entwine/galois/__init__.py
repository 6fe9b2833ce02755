from .data import (GaloisData, galois_data_from_coh, trivial_coactions, verify_galois_data,
                   coinvariant_subcategory, check_coinvariant)
from .canonical import (CanonicalMap, TranslationMap, hEh_tensors, canonical_map, quotient_coaction,
                        translation_maps, induced_entwining, representable_entwined,
                        representables_entwined, same_entwining)
from .corings import (Coring, GroupLikeCollection, CoringComodule, CoinvariantModule, verify_coring,
                      coring_hC, coring_hEh, can_as_coring_iso, group_like_hEh, group_like_hC,
                      verify_group_like, verify_coring_comodule, entwined_as_coring_comodule,
                      coring_comodule_to_entwined, coring_coinvariants)
from .convolution import (PhiFamily, GaloisCriteria, DecompositionIso, verify_phi,
                          convolution_inverse, can_inverse_via_phi, galois_criteria,
                          decomposition_iso)
from .smash import (SmashProduct, trivial_hom_action, verify_module_category, smash_product,
                    smash_can_inverse)
from .equivalence import (InducedModule, tensor_with_h, verify_unit_monomorphism,
                          equivalence_roundtrip)
