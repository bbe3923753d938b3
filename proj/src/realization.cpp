#include "nring/realization.hpp"

#include <algorithm>

namespace nring {

Realization::Realization(int n, std::vector<std::string> point_ids,
                         std::vector<IndexSet> memberships)
    : n_(n), ids_(std::move(point_ids)), memberships_(std::move(memberships)) {
    if (n_ < 1) throw CodeError("realization needs at least one region slot");
    if (ids_.empty()) throw CodeError("stimulus space must be nonempty");
    if (ids_.size() != memberships_.size())
        throw CodeError("point ids and memberships differ in length");
    for (IndexSet m : memberships_)
        if (!subset_of(m, full_set(n_))) throw CodeError("membership references a region > n");
    std::vector<std::string> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw CodeError("duplicate point id");
}

std::vector<std::size_t> Realization::field(int i) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size(); ++p)
        if (contains(memberships_[p], i)) out.push_back(p);
    return out;
}

Realization realize(const NeuralCode& code) {
    if (code.empty()) throw CodeError("cannot realize the empty code");
    std::vector<std::string> ids;
    std::vector<IndexSet> memberships;
    ids.reserve(code.size());
    for (std::size_t k = 0; k < code.size(); ++k) {
        ids.push_back(to_binary(code.word(k)));
        memberships.push_back(support(code.word(k)));
    }
    return Realization(code.n(), std::move(ids), std::move(memberships));
}

NeuralCode code_of_realization(const Realization& r) {
    std::vector<std::uint32_t> words;
    words.reserve(r.size());
    for (std::size_t p = 0; p < r.size(); ++p) words.push_back(r.membership(p));
    return NeuralCode(r.n(), std::move(words));
}

std::vector<std::size_t> region(const Realization& r, IndexSet sigma, IndexSet tau) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < r.size(); ++p) {
        IndexSet m = r.membership(p);
        if (subset_of(sigma, m) && (tau & m) == 0) out.push_back(p);
    }
    return out;
}

Realization parse_realization(std::string_view text, int n) {
    std::vector<std::string> ids;
    std::vector<IndexSet> memberships;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty()) continue;

        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw CodeError("realization line missing ':': " + std::string(line));
        std::string id(line.substr(0, colon));
        while (!id.empty() && id.back() == ' ') id.pop_back();
        if (id.empty()) throw CodeError("realization point id is empty");

        std::string_view rest = line.substr(colon + 1);
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        IndexSet m = 0;
        if (rest != "-") {
            std::size_t rp = 0;
            while (rp < rest.size()) {
                std::size_t comma = rest.find(',', rp);
                if (comma == std::string_view::npos) comma = rest.size();
                std::string num(rest.substr(rp, comma - rp));
                std::erase(num, ' ');
                if (num.empty()) throw CodeError("empty region index in realization line");
                int i = std::stoi(num);
                if (i < 1 || i > n) throw CodeError("region index out of range: " + num);
                m |= singleton(i);
                rp = comma + 1;
            }
        }
        ids.push_back(std::move(id));
        memberships.push_back(m);
    }
    return Realization(n, std::move(ids), std::move(memberships));
}

std::string format_realization(const Realization& r) {
    std::string out;
    for (std::size_t p = 0; p < r.size(); ++p) {
        out += r.point_id(p);
        out += ": ";
        IndexSet m = r.membership(p);
        if (m == 0) {
            out += '-';
        } else {
            bool first = true;
            for (int i : elements(m)) {
                if (!first) out += ',';
                out += std::to_string(i);
                first = false;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace nring
