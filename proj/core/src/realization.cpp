#include "qgamble/realization.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>
#include <set>
#include <unordered_map>

#include "qgamble/error.hpp"

namespace qgamble {

std::string_view to_string(Field f) {
    return f == Field::Real ? "real" : "complex";
}

void Realization::assign(const EventId& e, Subspace s) {
    if (s.ambient_dim() != ambient_dim_) {
        throw Error(Errc::DimMismatch, "event " + e.label() + " lives in dimension " +
                                           std::to_string(s.ambient_dim()) + ", expected " +
                                           std::to_string(ambient_dim_));
    }
    subspaces_.insert_or_assign(e, std::move(s));
}

const Subspace& Realization::at(const EventId& e) const {
    auto it = subspaces_.find(e);
    if (it == subspaces_.end()) throw Error(Errc::UnmappedAtom, "event " + e.label() + " has no subspace");
    return it->second;
}

bool operator==(const Realization& a, const Realization& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.field_ == b.field_ && a.subspaces_ == b.subspaces_;
}

std::string describe(const JoinIdentity& id, const Gamble& g) {
    auto side = [&](std::size_t k, const std::vector<EventId>& atoms) {
        std::string out;
        for (const auto& e : atoms) {
            if (!out.empty()) out += " v ";
            out += e.label();
        }
        const auto& name = g.algebra(k).name();
        return out + " [" + (name.empty() ? std::to_string(k + 1) : name) + "]";
    };
    return side(id.left_algebra, id.left) + " = " + side(id.right_algebra, id.right);
}

bool PossibilityReport::passes(PossibilityGroup g) const {
    return std::none_of(violations.begin(), violations.end(),
                        [g](const PossibilityViolation& v) { return v.group == g; });
}

std::vector<std::string> PossibilityReport::messages(PossibilityGroup g) const {
    std::vector<std::string> out;
    for (const auto& v : violations) {
        if (v.group == g) out.push_back(v.message);
    }
    return out;
}

namespace {

std::string algebra_label(const Gamble& g, std::size_t k) {
    const auto& name = g.algebra(k).name();
    return name.empty() ? "algebra " + std::to_string(k + 1) : name;
}

std::size_t hash_matrix(const Matrix& m) {
    std::size_t h = m.rows();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            h ^= std::hash<Scalar>{}(m(r, c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
    }
    return h;
}

constexpr std::size_t kMaxJoinAtoms = 20;

} // namespace

std::vector<JoinIdentity> derived_identities(const Gamble& g, const Realization& r) {
    struct Join {
        std::size_t algebra;
        std::uint32_t mask;
    };
    std::vector<std::vector<Projector>> joins(g.algebra_count());
    std::unordered_map<std::size_t, std::vector<Join>> buckets;

    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        const auto& atoms = g.algebra(k).atoms();
        if (atoms.size() > kMaxJoinAtoms) {
            throw Error(Errc::InvalidRealization, algebra_label(g, k) + " has too many atoms to enumerate joins");
        }
        const std::uint32_t full = (std::uint32_t{1} << atoms.size()) - 1;
        std::vector<Projector> atom_proj;
        for (const auto& a : atoms) atom_proj.push_back(projector(r.at(a)));
        auto& table = joins[k];
        table.reserve(full + 1);
        table.push_back(atom_proj.front());  // placeholder for the empty mask
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const auto low = static_cast<std::size_t>(std::countr_zero(mask));
            const std::uint32_t rest = mask & (mask - 1);
            if (rest == 0) {
                table.push_back(atom_proj[low]);
            } else {
                const Projector pair[] = {table[rest], atom_proj[low]};
                table.push_back(projector_from_orthogonal(pair));
            }
            if (mask != full) buckets[hash_matrix(table.back().matrix())].push_back({k, mask});
        }
    }

    std::set<std::tuple<std::size_t, std::vector<EventId>, std::size_t, std::vector<EventId>>> seen;
    std::vector<JoinIdentity> out;
    auto atoms_of = [&](const Join& j) {
        std::vector<EventId> v;
        const auto& atoms = g.algebra(j.algebra).atoms();
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (j.mask & (std::uint32_t{1} << a)) v.push_back(atoms[a]);
        }
        std::sort(v.begin(), v.end());
        return v;
    };

    std::vector<std::pair<std::size_t, std::vector<Join>>> ordered(buckets.begin(), buckets.end());
    for (auto& [h, list] : ordered) {
        std::sort(list.begin(), list.end(), [](const Join& a, const Join& b) {
            return std::tie(a.algebra, a.mask) < std::tie(b.algebra, b.mask);
        });
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.second.front().algebra, a.second.front().mask) <
                         std::tie(b.second.front().algebra, b.second.front().mask);
              });

    for (const auto& [h, list] : ordered) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const Join& a = list[i];
                const Join& b = list[j];
                if (a.algebra == b.algebra) continue;
                if (!(joins[a.algebra][a.mask] == joins[b.algebra][b.mask])) continue;
                const auto left_all = atoms_of(a);
                const auto right_all = atoms_of(b);
                std::vector<EventId> left, right;
                std::set_difference(left_all.begin(), left_all.end(), right_all.begin(), right_all.end(),
                                    std::back_inserter(left));
                std::set_difference(right_all.begin(), right_all.end(), left_all.begin(), left_all.end(),
                                    std::back_inserter(right));
                if (left.empty() || right.empty()) continue;
                if (!seen.emplace(a.algebra, left, b.algebra, right).second) continue;
                out.push_back({a.algebra, std::move(left), b.algebra, std::move(right)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const JoinIdentity& x, const JoinIdentity& y) {
        return std::tie(x.left_algebra, x.right_algebra, x.left, x.right) <
               std::tie(y.left_algebra, y.right_algebra, y.left, y.right);
    });
    return out;
}

PossibilityReport verify_realization(const Gamble& g, const Realization& r) {
    for (const auto& e : g.universe()) {
        if (!r.has(e)) throw Error(Errc::UnmappedAtom, "event " + e.label() + " has no subspace");
    }
    PossibilityReport report;
    const std::size_t n = r.ambient_dim();

    // (a) each algebra is a resolution of the identity into orthogonal pieces.
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        const auto& atoms = g.algebra(k).atoms();
        bool ok = true;
        std::size_t rank_total = 0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const auto& si = r.at(atoms[i]);
            if (si.is_zero()) {
                report.violations.push_back({PossibilityGroup::Partition,
                                             algebra_label(g, k) + ": " + atoms[i].label() + " is the zero subspace"});
                ok = false;
            }
            rank_total += si.rank();
            for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                if (!orthogonal(si, r.at(atoms[j]))) {
                    report.violations.push_back({PossibilityGroup::Partition,
                                                 algebra_label(g, k) + ": " + atoms[i].label() + " not orthogonal to " +
                                                     atoms[j].label()});
                    ok = false;
                }
            }
        }
        if (ok && rank_total != n) {
            report.violations.push_back({PossibilityGroup::Partition,
                                         algebra_label(g, k) + ": atoms span dimension " + std::to_string(rank_total) +
                                             " of " + std::to_string(n)});
        }
    }

    // (b) one subspace per shared EventId in the ambient space.
    for (const auto& shared : shared_atoms(g)) {
        const auto& s = r.at(shared.event);
        if (s.ambient_dim() != n) {
            report.violations.push_back({PossibilityGroup::Identity,
                                         shared.event.label() + " is not in the common ambient space"});
        }
    }

    // (c) every two algebras hold an incompatible atom pair. An incompatible
    // join pair exists iff an incompatible atom pair does, since sums of
    // commuting projectors commute.
    std::vector<std::vector<Projector>> proj(g.algebra_count());
    for (std::size_t k = 0; k < g.algebra_count(); ++k) {
        for (const auto& a : g.algebra(k).atoms()) proj[k].push_back(projector(r.at(a)));
    }
    for (std::size_t k1 = 0; k1 < g.algebra_count(); ++k1) {
        for (std::size_t k2 = k1 + 1; k2 < g.algebra_count(); ++k2) {
            bool incompatible = false;
            for (std::size_t i = 0; i < proj[k1].size() && !incompatible; ++i) {
                for (std::size_t j = 0; j < proj[k2].size() && !incompatible; ++j) {
                    incompatible = !commute(proj[k1][i], proj[k2][j]);
                }
            }
            if (!incompatible) {
                report.violations.push_back({PossibilityGroup::Incompatibility,
                                             algebra_label(g, k1) + " and " + algebra_label(g, k2) + " are compatible"});
            }
        }
    }

    // (d) only meaningful once every algebra is a genuine partition.
    if (report.passes(PossibilityGroup::Partition)) report.derived_identities = derived_identities(g, r);
    return report;
}

} // namespace qgamble
