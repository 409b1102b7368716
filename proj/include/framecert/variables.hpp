#ifndef FRAMECERT_VARIABLES_HPP
#define FRAMECERT_VARIABLES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "framecert/error.hpp"

namespace framecert {

/// Ordered list of real variable names; index <-> name bijection is stable
/// for a problem instance. Shared immutably by all polynomials of a system.
class VariableTable {
public:
    explicit VariableTable(std::vector<std::string> names);

    /// The d*d real coordinates of a d x d Hermitian matrix: all x_jk with
    /// j <= k in row-major order, then all y_jk with j < k. For d = 4 this is
    /// x11,x12,x13,x14,x22,x23,x24,x33,x34,x44,y12,y13,y14,y23,y24,y34.
    static std::shared_ptr<const VariableTable> hermitian(int d);

    static std::shared_ptr<const VariableTable> make(std::vector<std::string> names) {
        return std::make_shared<VariableTable>(std::move(names));
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    size_t index_of(const std::string& name) const;

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.names_ == b.names_;
    }
    friend bool operator!=(const VariableTable& a, const VariableTable& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, size_t> index_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

inline bool same_table(const VariableTablePtr& a, const VariableTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace framecert

#endif
