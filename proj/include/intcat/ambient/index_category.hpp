#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intcat/error.hpp"

namespace intcat {

using ObjectId = int;
using ArrowId = int;

/// A finite category given by tables. Serves both as the shape of the ambient
/// presheaf category and as the realization of its slices (categories of
/// elements).
///
/// Composition is stored as a dense arrow_count x arrow_count table where
/// entry (g, f) is g∘f when target(f) == source(g) and -1 otherwise.
class IndexCategory {
 public:
  struct Arrow {
    std::string label;
    ObjectId source = 0;
    ObjectId target = 0;
    bool operator==(const Arrow&) const = default;
  };

  IndexCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
                std::vector<ArrowId> identities, std::vector<ArrowId> composition);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_label(ObjectId c) const { return objects_[c]; }
  const Arrow& arrow(ArrowId u) const { return arrows_[u]; }
  ObjectId source(ArrowId u) const { return arrows_[u].source; }
  ObjectId target(ArrowId u) const { return arrows_[u].target; }
  ArrowId identity(ObjectId c) const { return identities_[c]; }
  bool is_identity(ArrowId u) const { return identities_[source(u)] == u; }

  /// g∘f, or -1 when target(f) != source(g) or the table has a hole.
  ArrowId compose(ArrowId g, ArrowId f) const {
    return composition_[static_cast<std::size_t>(g) * arrows_.size() + f];
  }

  /// Arrows u with target(u) == c, in arrow order. These index the
  /// representable presheaf at c.
  std::span<const ArrowId> arrows_into(ObjectId c) const { return into_[c]; }
  std::span<const ArrowId> arrows_from(ObjectId c) const { return from_[c]; }
  /// Arrows d -> c.
  std::vector<ArrowId> hom(ObjectId d, ObjectId c) const;

  std::optional<ObjectId> find_object(std::string_view label) const;
  std::optional<ArrowId> find_arrow(std::string_view label) const;

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<ArrowId>& identities() const { return identities_; }
  const std::vector<ArrowId>& composition() const { return composition_; }

  /// Same tables up to object and arrow labels.
  bool same_shape(const IndexCategory& other) const;
  bool operator==(const IndexCategory& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> composition_;
  std::vector<std::vector<ArrowId>> into_;
  std::vector<std::vector<ArrowId>> from_;
};

using Base = std::shared_ptr<const IndexCategory>;

bool same_base(const Base& a, const Base& b);

/// Lists every violated associativity / identity / closure instance.
ValidationReport validate_index_category(const IndexCategory& c);

/// The one-object, one-arrow category: presheaves on it are finite sets.
Base point_base();
/// The poset 0 < 1 < ... < n-1 as a category.
Base chain_base(int n);
/// A preorder given by a reflexive-transitive relation leq[i][j] (i <= j).
/// Arrow i -> j exists iff leq[i][j]; labels are "i<=j" (identities "id_i").
Base preorder_base(std::vector<std::string> objects, const std::vector<std::vector<bool>>& leq);
/// A discrete category on the given object labels.
Base discrete_base(std::vector<std::string> objects);

}  // namespace intcat
