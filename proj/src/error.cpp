#include "rwb/error.hpp"

namespace rwb {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::not_associative: return "NotAssociative";
    case Errc::bad_identity: return "BadIdentity";
    case Errc::depth_overflow: return "DepthOverflow";
    case Errc::identity_axiom_fails: return "IdentityAxiomFails";
    case Errc::composition_fails: return "CompositionFails";
    case Errc::monoid_mismatch: return "MonoidMismatch";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::size_overflow: return "SizeOverflow";
    case Errc::not_em_coalgebra: return "NotEMCoalgebra";
    case Errc::not_a_forest: return "NotAForest";
    case Errc::not_path_shaped: return "NotPathShaped";
    case Errc::no_chain_witness_in_budget: return "NoChainWitnessInBudget";
    case Errc::truncation_too_small: return "TruncationTooSmall";
    case Errc::not_an_embedding: return "NotAnEmbedding";
    case Errc::incomplete_fiber: return "IncompleteFiber";
    case Errc::missing_ordering: return "MissingOrdering";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rwb
