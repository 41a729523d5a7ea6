#include "latent/statement.hpp"

#include <algorithm>

namespace latent {

StatementSet::StatementSet(std::vector<Statement> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool StatementSet::contains(const Statement& s) const {
    return std::binary_search(items_.begin(), items_.end(), s);
}

bool StatementSet::intersects(const StatementSet& other) const {
    for (const Statement& s : other)
        if (contains(s)) return true;
    return false;
}

StatementSet StatementSet::with(const Statement& s) const {
    if (contains(s)) return *this;
    StatementSet out = *this;
    out.items_.insert(std::upper_bound(out.items_.begin(), out.items_.end(), s), s);
    return out;
}

StatementSet StatementSet::united(const StatementSet& other) const {
    std::vector<Statement> merged;
    merged.reserve(items_.size() + other.items_.size());
    std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
               std::back_inserter(merged));
    return StatementSet(std::move(merged));
}

std::vector<Elem> fiber(const StatementSet& X, Elem a) {
    std::vector<Elem> out;
    for (const Statement& s : X)
        if (s.a == a) out.push_back(s.x);
    return out;
}

void Context::require(const Statement& s) const {
    if (s.x < 0 || s.x >= L.size())
        throw ForeignElement("#" + std::to_string(s.x));
    if (s.a < 0 || s.a >= B.size())
        throw ForeignElement("#" + std::to_string(s.a));
}

void Context::require(const StatementSet& X) const {
    for (const Statement& s : X) require(s);
}

void Context::require(const Sequent& seq) const {
    require(seq.antecedent);
    require(seq.succedent);
}

}  // namespace latent
