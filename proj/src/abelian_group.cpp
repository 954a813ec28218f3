#include "ellsw/abelian_group.hpp"

#include "ellsw/errors.hpp"
#include "ellsw/smith.hpp"

#include <algorithm>
#include <sstream>

namespace ellsw {

namespace {

bigint reduce_mod(const bigint& v, const bigint& d) {
    bigint r = v % d;
    if (r < 0)
        r += d;
    return r;
}

void check_same_group(const group_element& a, const group_element& b, const char* op) {
    if (!a.group() || !b.group() || !a.group()->same_structure(*b.group()))
        throw precondition_error(std::string("group mismatch in ") + op);
}

} // namespace

group_element::group_element(group_ptr group, std::vector<bigint> free_part,
                             std::vector<bigint> torsion_part)
    : group_(std::move(group)), free_(std::move(free_part)), torsion_(std::move(torsion_part)) {
    if (!group_)
        throw precondition_error("group element without a group");
    if (free_.size() != group_->free_rank() || torsion_.size() != group_->torsion_orders().size())
        throw precondition_error("group element coordinate count mismatch");
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        torsion_[i] = reduce_mod(torsion_[i], group_->torsion_orders()[i]);
}

bool group_element::is_zero() const {
    auto zero = [](const bigint& v) { return v == 0; };
    return std::all_of(free_.begin(), free_.end(), zero) &&
           std::all_of(torsion_.begin(), torsion_.end(), zero);
}

bool group_element::has_infinite_order() const {
    return std::any_of(free_.begin(), free_.end(), [](const bigint& v) { return v != 0; });
}

group_element group_element::operator-() const {
    std::vector<bigint> f(free_.size()), t(torsion_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        f[i] = -free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        t[i] = -torsion_[i];
    return {group_, std::move(f), std::move(t)};
}

group_element group_element::operator+(const group_element& rhs) const {
    check_same_group(*this, rhs, "addition");
    std::vector<bigint> f(free_.size()), t(torsion_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        f[i] = free_[i] + rhs.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        t[i] = torsion_[i] + rhs.torsion_[i];
    return {group_, std::move(f), std::move(t)};
}

group_element group_element::operator-(const group_element& rhs) const {
    return *this + (-rhs);
}

bool group_element::operator==(const group_element& rhs) const {
    check_same_group(*this, rhs, "comparison");
    return free_ == rhs.free_ && torsion_ == rhs.torsion_;
}

std::string group_element::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < free_.size(); ++i)
        os << (i ? ", " : "") << free_[i].str();
    if (!torsion_.empty()) {
        os << "; ";
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            os << (i ? ", " : "") << torsion_[i].str();
    }
    os << ")";
    return os.str();
}

group_element operator*(const bigint& n, const group_element& e) {
    std::vector<bigint> f(e.free_part().size()), t(e.torsion_part().size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = n * e.free_part()[i];
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = n * e.torsion_part()[i];
    return {e.group(), std::move(f), std::move(t)};
}

group_element abelian_group::zero() const {
    return {shared_from_this(), std::vector<bigint>(free_rank_),
            std::vector<bigint>(torsion_orders_.size())};
}

group_element abelian_group::generator(std::size_t i) const {
    if (i >= num_generators())
        throw precondition_error("generator index out of range");
    return {shared_from_this(), gen_free_[i], gen_torsion_[i]};
}

group_element abelian_group::element(const std::vector<bigint>& generator_coeffs) const {
    if (generator_coeffs.size() != num_generators())
        throw precondition_error("coefficient vector length does not match generator count");
    std::vector<bigint> f(free_rank_), t(torsion_orders_.size());
    for (std::size_t i = 0; i < generator_coeffs.size(); ++i) {
        if (generator_coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < free_rank_; ++j)
            f[j] += generator_coeffs[i] * gen_free_[i][j];
        for (std::size_t j = 0; j < t.size(); ++j)
            t[j] += generator_coeffs[i] * gen_torsion_[i][j];
    }
    return {shared_from_this(), std::move(f), std::move(t)};
}

bool abelian_group::same_structure(const abelian_group& other) const {
    return free_rank_ == other.free_rank_ && torsion_orders_ == other.torsion_orders_;
}

std::string abelian_group::structure_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << " + ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        os << "Z";
    } else if (free_rank_ > 1) {
        sep();
        os << "Z^" << free_rank_;
    }
    for (const bigint& d : torsion_orders_) {
        sep();
        os << "Z/" << d.str();
    }
    if (first)
        os << "0";
    return os.str();
}

group_ptr present_group(std::size_t num_generators, const int_matrix& relations) {
    if (relations.rows() > 0 && relations.cols() != num_generators)
        throw precondition_error("relation matrix must have one column per generator");

    const smith_decomposition snf = smith_normal_form(
        relations.rows() > 0 ? relations : int_matrix(0, num_generators));
    const std::size_t diag = std::min(relations.rows(), num_generators);

    // Classify canonical coordinates: order 1 columns vanish, order 0 (and
    // columns beyond the diagonal) are free, the rest are torsion.
    std::vector<std::size_t> free_cols, torsion_cols;
    std::vector<bigint> torsion_orders;
    for (std::size_t j = 0; j < num_generators; ++j) {
        const bigint d = j < diag ? snf.d.at(j, j) : bigint(0);
        if (d == 1)
            continue;
        if (d == 0) {
            free_cols.push_back(j);
        } else {
            torsion_cols.push_back(j);
            torsion_orders.push_back(d);
        }
    }

    // The canonical coordinates of generator i are row i of V. Normalize the
    // sign of each free coordinate functional so the first generator with a
    // nonzero coordinate gets a positive one.
    int_matrix v = snf.v;
    for (std::size_t j : free_cols) {
        for (std::size_t i = 0; i < num_generators; ++i) {
            if (v.at(i, j) == 0)
                continue;
            if (v.at(i, j) < 0)
                v.negate_col(j);
            break;
        }
    }

    auto group = std::shared_ptr<abelian_group>(new abelian_group());
    group->free_rank_ = free_cols.size();
    group->torsion_orders_ = torsion_orders;
    group->gen_free_.resize(num_generators);
    group->gen_torsion_.resize(num_generators);
    for (std::size_t i = 0; i < num_generators; ++i) {
        for (std::size_t j : free_cols)
            group->gen_free_[i].push_back(v.at(i, j));
        for (std::size_t k = 0; k < torsion_cols.size(); ++k)
            group->gen_torsion_[i].push_back(reduce_mod(v.at(i, torsion_cols[k]), torsion_orders[k]));
    }
    return group;
}

bool operator<(const fiber_solution& a, const fiber_solution& b) {
    if (a.d != b.d)
        return a.d < b.d;
    return std::lexicographical_compare(a.residues.begin(), a.residues.end(),
                                        b.residues.begin(), b.residues.end());
}

std::vector<fiber_solution> fiber_representations(
    const group_element& fiber,
    const std::vector<std::pair<bigint, group_element>>& multiple_fibers,
    const group_element& target) {
    check_same_group(fiber, target, "fiber representation solving");
    if (!fiber.has_infinite_order())
        throw precondition_error("fiber class has finite order: enumeration would not terminate");

    const std::vector<bigint>& f = fiber.free_part();
    std::size_t lead = 0;
    while (f[lead] == 0)
        ++lead;

    std::vector<fiber_solution> found;
    std::vector<bigint> residues(multiple_fibers.size(), bigint(0));
    for (;;) {
        group_element rest = target;
        for (std::size_t i = 0; i < residues.size(); ++i)
            rest = rest - residues[i] * multiple_fibers[i].second;

        // The free coordinates force d uniquely, if it exists at all.
        if (rest.free_part()[lead] % f[lead] == 0) {
            const bigint d = rest.free_part()[lead] / f[lead];
            if (d >= 0 && d * fiber == rest)
                found.push_back({d, residues});
        }

        // odometer over 0 <= a_i < m_i
        std::size_t pos = 0;
        while (pos < residues.size()) {
            residues[pos] += 1;
            if (residues[pos] < multiple_fibers[pos].first)
                break;
            residues[pos] = 0;
            ++pos;
        }
        if (pos == residues.size())
            break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace ellsw
