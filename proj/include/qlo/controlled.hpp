#ifndef QLO_CONTROLLED_HPP_
#define QLO_CONTROLLED_HPP_

// Order-preserving homomorphisms mu: (G, P) -> (K, Q) and the two ways of
// controlling their fibres: minimal-element sets Sigma_q, or families of
// decreasing chains s_n^lambda whose upper sets cover the fibre.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlo/order.hpp"
#include "qlo/report.hpp"

namespace qlo {

  struct Morphism {
    std::string                            name;
    PresentationPtr                        source;
    PresentationPtr                        target;
    std::function<Element(Element const&)> eval;

    Element operator()(Element const& x) const {
      return eval(x);
    }
  };

  struct SigmaWitness {
    std::string                                        name;
    std::function<std::vector<Element>(Element const&)> sigma;  // Sigma_q
  };

  struct Chain {
    std::string          label;  // lambda
    std::vector<Element> terms;  // s_0, ..., s_N
  };

  struct LambdaWitness {
    std::string name;
    // The chains s^lambda for the fibre over q, each of length depth + 1.
    std::function<std::vector<Chain>(Element const& q, std::size_t depth)> chains;
  };

  // A preset morphism with whatever witness data is known for it.
  struct ControlledPreset {
    Morphism                     mu;
    std::optional<SigmaWitness>  sigma;
    std::optional<LambdaWitness> lambda;
  };

  // The standard morphism of a preset family. The ball bounds the finite
  // slices that witness generators enumerate.
  std::optional<ControlledPreset> controlled_preset(PresentationPtr source,
                                                   std::size_t     radius);

  // Sigma_0 = {e} and Sigma_q empty otherwise: the height map of bs(1,-1)
  // has no minimal elements above level 0.
  SigmaWitness bs_empty_sigma(PresentationPtr source);

  // Constant chains through each member of Sigma_q.
  LambdaWitness constant_chains(SigmaWitness const& sigma);

  std::vector<Finding> check_homomorphism(Morphism const& mu, Ball const& ball);
  std::vector<Finding> check_order_preserving(Morphism const& mu, Ball const& ball);
  std::vector<Finding> check_join_preserving(Morphism const& mu, Ball const& ball);

  // Finding kinds "axiom (i)" (an element above no member of Sigma_q),
  // "axiom (ii)" (two members with a finite join) and "sigma member" (a
  // member outside the fibre or the cone).
  std::vector<Finding> check_sigma_axioms(Morphism const& mu,
                                          SigmaWitness const& sigma,
                                          Ball const& ball);

  struct CoverReport {
    std::vector<Finding>     findings;
    std::vector<std::string> lambdas_seen;  // classes that cover some element
  };

  // Chains decrease, every fibre element lies above exactly one chain, and
  // elements of different classes have no common upper bound.
  CoverReport check_decreasing_cover(Morphism const& mu,
                                     LambdaWitness const& lambda,
                                     Ball const& ball, std::size_t depth);

  // Ball indices of ker(mu) n P.
  std::vector<std::size_t> kernel_cone(Morphism const& mu, Ball const& ball);

}  // namespace qlo

#endif  // QLO_CONTROLLED_HPP_
