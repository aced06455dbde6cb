#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intcat/ambient/presheaf.hpp"
#include "intcat/ambient/search.hpp"

namespace intcat {

/// One coordinate of a family: a natural map y(c) × source -> target.
struct FamilyBlock {
  Presheaf source;
  Presheaf target;
};

/// Variable layout of the families at one stage c: one variable per block and
/// element (u : d -> c, x in source(d)), valued in target(d).
class FamilyLayout {
 public:
  FamilyLayout(const Base& base, ObjectId stage, const std::vector<FamilyBlock>& blocks);

  ObjectId stage() const { return stage_; }
  /// Arrows into the stage; the identity comes first.
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  int var(int block, ArrowId u, ElementId x) const { return offset_[block][slot_[u]] + x; }
  int variable_count() const { return count_; }
  int block_count() const { return static_cast<int>(offset_.size()); }

 private:
  ObjectId stage_;
  std::vector<ArrowId> arrows_;
  std::vector<int> slot_;
  std::vector<std::vector<int>> offset_;
  int count_ = 0;
};

/// The search problem for families at one stage, with naturality links
/// already installed. Constructions add their own equations on top.
class FamilySpace {
 public:
  FamilySpace(const Base& base, ObjectId stage, const std::vector<FamilyBlock>& blocks);

  const IndexCategory& base() const { return *base_; }
  ObjectId stage() const { return layout_.stage(); }
  const std::vector<ArrowId>& arrows() const { return layout_.arrows(); }
  int var(int block, ArrowId u, ElementId x) const { return layout_.var(block, u, x); }
  const FamilyLayout& layout() const { return layout_; }
  const std::vector<FamilyBlock>& blocks() const { return blocks_; }
  SearchProblem& problem() { return problem_; }

 private:
  Base base_;
  std::vector<FamilyBlock> blocks_;
  FamilyLayout layout_;
  SearchProblem problem_;
};

struct FamilySpec {
  std::vector<FamilyBlock> blocks;
  /// Adds the defining equations at one stage; may be empty.
  std::function<void(FamilySpace&)> constrain;
  /// Element label; defaults to the family values (one "[...]" per block).
  std::function<std::string(const FamilyLayout&, const std::vector<int>&)> label;
};

/// The presheaf whose elements at c are the solutions of the stage-c family
/// problem, acting by reindexing families along index arrows.
class FamilyPresheaf {
 public:
  FamilyPresheaf() = default;
  FamilyPresheaf(const Base& base, const FamilySpec& spec);
  FamilyPresheaf(const Base& base, const FamilySpec& spec, Execution mode);

  const Presheaf& object() const { return d_->object; }
  const FamilyLayout& layout(ObjectId c) const { return d_->layouts[c]; }
  const std::vector<int>& assignment(ObjectId c, ElementId e) const { return d_->values[c][e]; }
  ElementId value(ObjectId c, ElementId e, int block, ArrowId u, ElementId x) const {
    return d_->values[c][e][d_->layouts[c].var(block, u, x)];
  }
  /// The value at the identity of c.
  ElementId local(ObjectId c, ElementId e, int block, ElementId x) const {
    return value(c, e, block, d_->base->identity(c), x);
  }
  std::optional<ElementId> find(ObjectId c, const std::vector<int>& assignment) const;
  /// Collects an assignment at stage c from a value function, then looks it up.
  std::optional<ElementId> find(ObjectId c,
                                const std::function<ElementId(int, ArrowId, ElementId)>& value) const;
  const std::vector<FamilyBlock>& blocks() const { return d_->blocks; }

 private:
  struct Data {
    Base base;
    std::vector<FamilyBlock> blocks;
    std::vector<FamilyLayout> layouts;
    std::vector<std::vector<std::vector<int>>> values;
    std::vector<std::map<std::vector<int>, ElementId>> lookup;
    Presheaf object;
  };
  std::shared_ptr<const Data> d_;
};

/// Default label: one "[...]" per block in variable order, tupled when there
/// are several blocks.
std::string family_label(const std::vector<FamilyBlock>& blocks, const FamilyLayout& layout,
                         const std::vector<int>& assignment, const IndexCategory& base);

}  // namespace intcat
