#include "invder/json_io.hpp"

#include <fstream>
#include <set>
#include <utility>

namespace invder {

namespace {

OrderedJson parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    try {
        return OrderedJson::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

const OrderedJson& field(const OrderedJson& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(ctx + ": missing field \"" + key + "\"");
    }
    return obj.at(key);
}

std::size_t read_size(const OrderedJson& v, const std::string& ctx) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError(ctx + ": expected a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

Rational read_rational(const OrderedJson& v, const std::string& ctx) {
    if (!v.is_string()) {
        throw InputError(ctx + ": rationals must be strings like \"3\" or \"-1/2\"");
    }
    try {
        return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(ctx + ": " + e.what());
    }
}

Vector read_vector(const OrderedJson& v, std::size_t len, const std::string& ctx) {
    if (!v.is_array() || v.size() != len) {
        throw InputError(ctx + ": expected an array of " + std::to_string(len) + " rationals");
    }
    Vector out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(read_rational(v[i], ctx + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix read_matrix(const OrderedJson& v, std::size_t rows, std::size_t cols,
                   const std::string& ctx) {
    if (!v.is_array() || v.size() != rows) {
        throw InputError(ctx + ": expected a matrix with " + std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vector row = read_vector(v[i], cols, ctx + "[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = row[j];
    }
    return m;
}

/** 1-based index in 1..n from a file. */
std::size_t read_index(const OrderedJson& v, std::size_t n, const std::string& ctx) {
    std::size_t i = read_size(v, ctx);
    if (i < 1 || i > n) {
        throw InputError(ctx + ": index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(n));
    }
    return i;
}

/** Dense antisymmetric grid [n][n][n] validated and folded onto pairs. */
Cochain2 read_grid(const OrderedJson& v, std::size_t n, const std::string& ctx) {
    if (!v.is_array() || v.size() != n) {
        throw InputError(ctx + ": expected a grid with " + std::to_string(n) + " layers");
    }
    std::vector<Vector> values(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const OrderedJson& layer = v[i];
        if (!layer.is_array() || layer.size() != n) {
            throw InputError(ctx + ": layer " + std::to_string(i) + " must have " +
                             std::to_string(n) + " rows");
        }
        for (std::size_t j = 0; j < n; ++j) {
            values[i * n + j] = read_vector(layer[j], n,
                                            ctx + "[" + std::to_string(i) + "][" +
                                                std::to_string(j) + "]");
        }
    }
    Cochain2 g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(values[i * n + i])) {
            throw InputError(ctx + ": diagonal entry " + std::to_string(i + 1) + " must vanish");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!is_zero(add(values[i * n + j], values[j * n + i]))) {
                throw InputError(ctx + ": entries (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") are not antisymmetric");
            }
            g.set_value(i, j, values[i * n + j]);
        }
    }
    return g;
}

}  // namespace

RawAlgebra load_raw_algebra(const std::string& path) {
    OrderedJson doc = parse_file(path);
    RawAlgebra raw;
    raw.dim = read_size(field(doc, "dim", path), path + ": dim");
    if (raw.dim == 0) {
        throw InputError(path + ": dim must be at least 1");
    }
    const std::size_t n = raw.dim;

    if (doc.contains("basis")) {
        const OrderedJson& basis = doc.at("basis");
        if (!basis.is_array() || basis.size() != n) {
            throw InputError(path + ": basis must list " + std::to_string(n) + " names");
        }
        for (const OrderedJson& name : basis) {
            if (!name.is_string()) throw InputError(path + ": basis names must be strings");
            raw.basis.push_back(name.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) raw.basis.push_back("e" + std::to_string(i + 1));
    }

    raw.constants.assign(n * n * n, Rational(0));
    const OrderedJson& brackets = field(doc, "brackets", path);
    if (!brackets.is_array()) {
        throw InputError(path + ": brackets must be an array");
    }
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t t = 0; t < brackets.size(); ++t) {
        const std::string ctx = path + ": brackets[" + std::to_string(t) + "]";
        const OrderedJson& entry = brackets[t];
        std::size_t i = read_index(field(entry, "i", ctx), n, ctx + ".i");
        std::size_t j = read_index(field(entry, "j", ctx), n, ctx + ".j");
        std::size_t k = read_index(field(entry, "k", ctx), n, ctx + ".k");
        if (i >= j) {
            throw InputError(ctx + ": expected i<j, got i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
        }
        if (!seen.insert({i, j, k}).second) {
            throw InputError(ctx + ": duplicate entry for (i,j,k)");
        }
        Rational c = read_rational(field(entry, "c", ctx), ctx + ".c");
        raw.constants[((i - 1) * n + (j - 1)) * n + (k - 1)] = c;
        raw.constants[((j - 1) * n + (i - 1)) * n + (k - 1)] = -c;
    }

    raw.delta = read_matrix(field(doc, "delta", path), n, n, path + ": delta");
    return raw;
}

InvDerStructure load_structure(const std::string& path) {
    RawAlgebra raw = load_raw_algebra(path);
    return InvDerStructure::validated(LieAlgebra(raw.dim, std::move(raw.constants), raw.basis),
                                      std::move(raw.delta));
}

Representation load_representation(const std::string& path, const InvDerStructure& base) {
    OrderedJson doc = parse_file(path);
    std::size_t m = read_size(field(doc, "target_dim", path), path + ": target_dim");
    const OrderedJson& rho = field(doc, "rho", path);
    if (!rho.is_array() || rho.size() != base.dim()) {
        throw InputError(path + ": rho must list one matrix per basis vector");
    }
    std::vector<Matrix> maps;
    maps.reserve(base.dim());
    for (std::size_t i = 0; i < base.dim(); ++i) {
        maps.push_back(read_matrix(rho[i], m, m, path + ": rho[" + std::to_string(i) + "]"));
    }
    Matrix dv = read_matrix(field(doc, "delta_v", path), m, m, path + ": delta_v");
    return Representation(base, std::move(maps), std::move(dv));
}

ExtensionCocycle load_cocycle(const std::string& path, std::size_t base_dim) {
    OrderedJson doc = parse_file(path);
    const std::size_t n = base_dim;
    std::size_t m = read_size(field(doc, "v_dim", path), path + ": v_dim");
    Matrix dv = read_matrix(field(doc, "delta_v", path), m, m, path + ": delta_v");

    Cochain2 gamma(n, m);
    const OrderedJson& table = field(doc, "gamma", path);
    if (!table.is_array()) {
        throw InputError(path + ": gamma must be an array of {i, j, v} entries");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < table.size(); ++t) {
        const std::string ctx = path + ": gamma[" + std::to_string(t) + "]";
        const OrderedJson& entry = table[t];
        std::size_t i = read_index(field(entry, "i", ctx), n, ctx + ".i");
        std::size_t j = read_index(field(entry, "j", ctx), n, ctx + ".j");
        if (i >= j) {
            throw InputError(ctx + ": expected i<j, got i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
        }
        if (!seen.insert({i, j}).second) {
            throw InputError(ctx + ": duplicate entry for (i,j)");
        }
        gamma.set_value(i - 1, j - 1, read_vector(field(entry, "v", ctx), m, ctx + ".v"));
    }

    Matrix chi = read_matrix(field(doc, "chi", path), m, n, path + ": chi");
    return ExtensionCocycle(m, std::move(dv), std::move(gamma), std::move(chi));
}

Deformation load_deformation(const std::string& path, const InvDerStructure& base) {
    OrderedJson doc = parse_file(path);
    const std::size_t n = base.dim();
    std::size_t order = read_size(field(doc, "order", path), path + ": order");

    const OrderedJson& mu = field(doc, "mu", path);
    const OrderedJson& delta = field(doc, "delta", path);
    // Each list holds either the higher coefficients alone or the full family
    // starting at order 0; a present order-0 entry must restate the base.
    auto list_offset = [&](const OrderedJson& list, const char* what) {
        if (!list.is_array() || (list.size() != order && list.size() != order + 1)) {
            throw InputError(path + ": " + what + " must list " + std::to_string(order) + " or " +
                             std::to_string(order + 1) + " coefficients");
        }
        return list.size() == order ? 0 : 1;
    };
    const std::size_t mu_offset = list_offset(mu, "mu");
    const std::size_t delta_offset = list_offset(delta, "delta");

    if (mu_offset == 1) {
        Cochain2 zeroth = read_grid(mu[0], n, path + ": mu[0]");
        Cochain2 expected(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                expected.set_value(i, j, base.algebra().bracket_basis(i, j));
            }
        }
        if (!(zeroth == expected)) {
            throw InputError(path + ": mu[0] must equal the base bracket");
        }
    }
    if (delta_offset == 1) {
        Matrix zeroth = read_matrix(delta[0], n, n, path + ": delta[0]");
        if (!(zeroth == base.delta())) {
            throw InputError(path + ": delta[0] must equal the base map");
        }
    }

    std::vector<Cochain2> higher_mu;
    std::vector<Matrix> higher_delta;
    for (std::size_t i = 0; i < order; ++i) {
        higher_mu.push_back(
            read_grid(mu[mu_offset + i], n, path + ": mu[" + std::to_string(mu_offset + i) + "]"));
        higher_delta.push_back(read_matrix(delta[delta_offset + i], n, n,
                                           path + ": delta[" +
                                               std::to_string(delta_offset + i) + "]"));
    }
    return Deformation(base, std::move(higher_mu), std::move(higher_delta));
}

Matrix load_matrix_file(const std::string& path) {
    OrderedJson doc = parse_file(path);
    if (!doc.is_array() || doc.empty() || !doc[0].is_array()) {
        throw InputError(path + ": expected an array of matrix rows");
    }
    return read_matrix(doc, doc.size(), doc[0].size(), path);
}

OrderedJson vector_json(const Vector& v) {
    OrderedJson out = OrderedJson::array();
    for (const Rational& x : v) out.push_back(rational_to_string(x));
    return out;
}

OrderedJson matrix_json(const Matrix& m) {
    OrderedJson out = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
    return out;
}

OrderedJson algebra_json(const LieAlgebra& L, const Matrix& delta) {
    const std::size_t n = L.dim();
    OrderedJson doc;
    doc["dim"] = n;
    doc["basis"] = L.basis_names();
    OrderedJson brackets = OrderedJson::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (L.c(i, j, k) == 0) continue;
                OrderedJson entry;
                entry["i"] = i + 1;
                entry["j"] = j + 1;
                entry["k"] = k + 1;
                entry["c"] = rational_to_string(L.c(i, j, k));
                brackets.push_back(std::move(entry));
            }
        }
    }
    doc["brackets"] = std::move(brackets);
    doc["delta"] = matrix_json(delta);
    return doc;
}

OrderedJson cocycle_json(const ExtensionCocycle& e) {
    OrderedJson doc;
    doc["v_dim"] = e.v_dim;
    doc["delta_v"] = matrix_json(e.delta_v);
    OrderedJson table = OrderedJson::array();
    const std::size_t n = e.gamma.source_dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = e.gamma.value(i, j);
            if (is_zero(v)) continue;
            OrderedJson entry;
            entry["i"] = i + 1;
            entry["j"] = j + 1;
            entry["v"] = vector_json(v);
            table.push_back(std::move(entry));
        }
    }
    doc["gamma"] = std::move(table);
    doc["chi"] = matrix_json(e.chi);
    return doc;
}

OrderedJson deformation_json(const Deformation& d) {
    const std::size_t n = d.base().dim();
    OrderedJson doc;
    doc["order"] = d.order();
    OrderedJson mu = OrderedJson::array();
    for (std::size_t t = 0; t <= d.order(); ++t) {
        OrderedJson grid = OrderedJson::array();
        for (std::size_t i = 0; i < n; ++i) {
            OrderedJson layer = OrderedJson::array();
            for (std::size_t j = 0; j < n; ++j) {
                layer.push_back(vector_json(d.mu(t).value(i, j)));
            }
            grid.push_back(std::move(layer));
        }
        mu.push_back(std::move(grid));
    }
    doc["mu"] = std::move(mu);
    OrderedJson delta = OrderedJson::array();
    for (std::size_t t = 0; t <= d.order(); ++t) delta.push_back(matrix_json(d.delta(t)));
    doc["delta"] = std::move(delta);
    return doc;
}

std::string render(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

}  // namespace invder
