#include <lvcert/potts/local_colouring.hpp>

#include <algorithm>
#include <array>

namespace lvcert {

namespace {

constexpr int max_colours = 40;

struct ViewData {
    int d = 0;
    int q_l = 0;
    std::vector<std::uint32_t> inner;  // bitmask over 1..d per neighbour
    std::vector<std::array<int, max_colours>> boundary;  // per neighbour colour counts
    std::vector<std::vector<int>> mults;
    std::vector<Partition> partitions;
    std::vector<int> code_index;

    explicit ViewData(const LocalView& view)
        : d(view.d), q_l(view.colour_count), inner(view.d + 1, 0), boundary(view.d + 1), mults(view.d + 1)
    {
        if (q_l + d + 1 >= max_colours)
            throw GraphError("local view has too many colours");
        for (auto [a, b] : view.inner_edges) {
            inner[a] |= 1u << b;
            inner[b] |= 1u << a;
        }
        for (int u = 1; u <= d; ++u) {
            boundary[u].fill(0);
            for (int c : view.mults[u - 1])
                ++boundary[u][c];
            mults[u] = view.mults[u - 1];
        }
        partitions = partitions_of(d);
        int radix = d + 1;
        int size = 1;
        for (int i = 0; i < d; ++i)
            size *= radix;
        code_index.assign(size, -1);
        for (std::size_t s = 0; s < partitions.size(); ++s)
            code_index[code(partitions[s])] = static_cast<int>(s);
    }

    int code(const Partition& p) const
    {
        int c = 0;
        for (int part : p)
            c = c * (d + 1) + part;
        for (std::size_t i = p.size(); i < static_cast<std::size_t>(d); ++i)
            c = c * (d + 1);
        return c;
    }

    /// Partition index of a frequency table over colours given as a list of
    /// the colours touched.
    int index_of(std::array<int, max_colours>& freq, const int* touched, int touched_count) const
    {
        std::array<int, 8> parts{};
        int n = 0;
        for (int i = 0; i < touched_count; ++i) {
            int c = touched[i];
            if (freq[c] > 0) {
                parts[n++] = freq[c];
                freq[c] = 0;
            }
        }
        std::sort(parts.begin(), parts.begin() + n, std::greater<>());
        int c = 0;
        for (int i = 0; i < d; ++i)
            c = c * (d + 1) + (i < n ? parts[i] : 0);
        return code_index[c];
    }

    int h_v_index(const int* colours) const
    {
        std::array<int, max_colours> freq{};
        for (int u = 1; u <= d; ++u)
            ++freq[colours[u]];
        return index_of(freq, colours + 1, d);
    }

    int h_u_index(const int* colours, int u) const
    {
        std::array<int, max_colours> freq{};
        std::array<int, 16> touched{};
        int n = 0;
        ++freq[colours[0]];
        touched[n++] = colours[0];
        for (int w = 1; w <= d; ++w)
            if (inner[u] >> w & 1u) {
                ++freq[colours[w]];
                touched[n++] = colours[w];
            }
        for (int c : mults[u]) {
            ++freq[c];
            touched[n++] = c;
        }
        return index_of(freq, touched.data(), n);
    }

    void energy(const int* colours, int& m, int& m_v) const
    {
        m_v = 0;
        int mono = 0;
        for (int u = 1; u <= d; ++u) {
            if (colours[u] == colours[0])
                ++m_v;
            mono += boundary[u][colours[u]];
            for (int w = u + 1; w <= d; ++w)
                if ((inner[u] >> w & 1u) && colours[u] == colours[w])
                    ++mono;
        }
        m = mono + m_v;
    }
};

}  // namespace

int max_monochromatic(const LocalView& view)
{
    return view.d * view.d - static_cast<int>(view.inner_edges.size());
}

LocalColouring describe_colouring(const LocalView& view, std::vector<int> colours)
{
    ViewData data(view);
    if (static_cast<int>(colours.size()) != view.d + 1)
        throw GraphError("colouring must assign every vertex of V_L");
    LocalColouring out;
    data.energy(colours.data(), out.m, out.m_v);
    out.ell = std::max(view.colour_count, *std::max_element(colours.begin(), colours.end()));
    out.h_v = data.partitions[data.h_v_index(colours.data())];
    for (int u = 1; u <= view.d; ++u)
        out.h_u.push_back(data.partitions[data.h_u_index(colours.data(), u)]);
    out.colours = std::move(colours);
    return out;
}

void enumerate_local_colourings(const LocalView& view, const std::function<void(const LocalColouring&)>& visit)
{
    int n = view.d + 1;
    int q_l = view.colour_count;
    int palette = q_l + n;
    std::vector<int> colours(n, 1);
    while (true) {
        int top = 0;
        std::uint64_t used = 0;
        for (int c : colours)
            if (c > q_l)
                used |= std::uint64_t{1} << (c - q_l - 1);
        top = std::popcount(used);
        if (used == (std::uint64_t{1} << top) - 1)
            visit(describe_colouring(view, colours));
        int i = n - 1;
        while (i >= 0 && colours[i] == palette) {
            colours[i] = 1;
            --i;
        }
        if (i < 0)
            break;
        ++colours[i];
    }
}

ColourTally tally_colour_classes(const LocalView& view)
{
    ViewData data(view);
    int d = view.d;
    int n = d + 1;
    ColourTally tally;
    tally.d = d;
    tally.q_l = data.q_l;
    tally.m_max = max_monochromatic(view);
    tally.max_extras = n;
    auto grid = [&]() {
        return std::vector<std::vector<std::int64_t>>(tally.m_max + 1, std::vector<std::int64_t>(n + 1, 0));
    };
    tally.count = grid();
    tally.centre = grid();
    tally.gamma.assign(data.partitions.size(), grid());

    std::vector<int> colours(n, 0);
    std::vector<int> h_u(n);
    auto leaf = [&](int extras) {
        int m = 0, m_v = 0;
        data.energy(colours.data(), m, m_v);
        ++tally.count[m][extras];
        tally.centre[m][extras] += m_v;
        tally.gamma[data.h_v_index(colours.data())][m][extras] += d;
        for (int u = 1; u <= d; ++u)
            --tally.gamma[data.h_u_index(colours.data(), u)][m][extras];
        ++tally.classes;
    };
    // Extras are numbered by first appearance, so vertex i may use a new
    // extra only as the next unused one.
    auto recurse = [&](auto&& self, int i, int extras) -> void {
        if (i == n) {
            leaf(extras);
            return;
        }
        for (int c = 1; c <= data.q_l + extras + 1; ++c) {
            colours[i] = c;
            self(self, i + 1, c > data.q_l + extras ? extras + 1 : extras);
        }
    };
    recurse(recurse, 0, 0);
    return tally;
}

}  // namespace lvcert
