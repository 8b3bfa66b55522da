#pragma once

#include <string>

#include "bridgecalc/state.hpp"

namespace bridgecalc {

enum class VpcKind { trivial_ball, product, punctured_product, punctured_trivial_ball, general };

std::string kind_name(VpcKind k);

struct VpcClass {
    VpcKind kind = VpcKind::general;
    // For product and punctured_product: the negative boundary parallel to the positive one.
    std::string partner;
};

// Combinatorial classification; these conditions are the engine's definition of
// product and trivial ball.
VpcClass classify_vpc(const PairState& s, const std::string& vpcId);

// True when the VPC is a product or punctured product whose parallel negative boundary is `partner`.
bool is_punctured_product_between(const PairState& s, const std::string& vpcId, const std::string& partner);

}  // namespace bridgecalc
