#include "hvlcl/codec.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace hvlcl {

namespace {

constexpr char kInsufficientBootstrap[] = "insufficient bootstrap capacity";
constexpr char kExtractionFailed[] = "extraction failed: wrong key or corrupt image";

// Applies fn(i, j, tag) to every non-reference cell in raster order.
template <class F>
void for_each_nonref(const LabelMap& map, F&& fn) {
    for (int i = map.ref_rows(); i < map.rows(); ++i)
        for (int j = 0; j < map.cols(); ++j)
            if (j >= map.ref_cols()) fn(i, j, static_cast<int>(map.tag(i, j)));
}

// The capacity overlay is the concatenation, in raster order, of each
// non-reference pixel's top capacity_of(t) bits. Unwritten positions keep
// the pixel's current bits.
void overlay_write(GrayImage& img, const LabelMap& map, std::uint64_t start,
                   const BitVec& bits) {
    if (bits.empty()) return;
    std::uint64_t end = start + bits.size();
    std::uint64_t pos = 0;
    for (int i = map.ref_rows(); i < map.rows() && pos < end; ++i) {
        for (int j = map.ref_cols(); j < map.cols() && pos < end; ++j) {
            std::uint64_t k = static_cast<std::uint64_t>(capacity_of(map.tag(i, j)));
            std::uint64_t lo = std::max(pos, start);
            std::uint64_t hi = std::min(pos + k, end);
            if (hi > lo) {
                int offset = static_cast<int>(lo - pos);
                int width = static_cast<int>(hi - lo);
                std::uint32_t value = 0;
                for (std::uint64_t b = lo; b < hi; ++b)
                    value = (value << 1) | (bits[b - start] ? 1u : 0u);
                int shift = 8 - offset - width;
                std::uint32_t mask = ((1u << width) - 1u) << shift;
                img(i, j) = static_cast<std::uint8_t>((img(i, j) & ~mask) | (value << shift));
            }
            pos += k;
        }
    }
    if (pos < end) throw std::runtime_error("overlay write out of range");
}

BitVec overlay_read(const GrayImage& img, const LabelMap& map, std::uint64_t start,
                    std::uint64_t nbits) {
    BitVec out;
    if (nbits == 0) return out;
    std::uint64_t end = start + nbits;
    std::uint64_t pos = 0;
    for (int i = map.ref_rows(); i < map.rows() && pos < end; ++i) {
        for (int j = map.ref_cols(); j < map.cols() && pos < end; ++j) {
            std::uint64_t k = static_cast<std::uint64_t>(capacity_of(map.tag(i, j)));
            std::uint64_t lo = std::max(pos, start);
            std::uint64_t hi = std::min(pos + k, end);
            for (std::uint64_t b = lo; b < hi; ++b) {
                int bit_index = static_cast<int>(b - pos);  // position from the pixel MSB
                out.push_back((img(i, j) >> (7 - bit_index)) & 1);
            }
            pos += k;
        }
    }
    if (out.size() != nbits) throw std::runtime_error("overlay read out of range");
    return out;
}

CapacityReport make_report(const LabelHistogram& hist, int ref_rows, int ref_cols,
                           const CodeTable& table) {
    CapacityReport report;
    report.hist = hist;
    report.ref_rows = ref_rows;
    report.ref_cols = ref_cols;
    for (int t = 0; t < 9; ++t) {
        report.total_capacity_bits += hist.counts[t] * capacity_of(t);
        report.code_bits += hist.counts[t] * table.codeword(t).length;
    }
    report.aux_stream_bits = report.code_bits + 8 * hist.ref_count;
    report.net_payload_bits = static_cast<std::int64_t>(report.total_capacity_bits) -
                              static_cast<std::int64_t>(report.code_bits) -
                              static_cast<std::int64_t>(kAuxHeaderBits);
    return report;
}

// Tags depend only on the image, never on the reference region: the region
// merely masks which cells count. Computing them once lets the bootstrap
// search try many regions without relabeling. Valid wherever i >= 1 and
// j >= 1, which covers the non-reference cells of every candidate region.
std::vector<std::int8_t> full_tag_field(const GrayImage& img) {
    std::vector<std::int8_t> tags(img.pixel_count(), LabelMap::kReference);
    for (int i = 1; i < img.rows(); ++i)
        for (int j = 1; j < img.cols(); ++j) {
            std::uint8_t px = med_predict(img(i - 1, j - 1), img(i - 1, j), img(i, j - 1));
            tags[static_cast<std::size_t>(i) * img.cols() + j] =
                static_cast<std::int8_t>(label_of(img(i, j), px));
        }
    return tags;
}

LabelHistogram histogram_for(const std::vector<std::int8_t>& tags, int m, int n, int r, int c) {
    LabelHistogram h;
    h.ref_count = static_cast<std::uint64_t>(r) * n + static_cast<std::uint64_t>(c) * (m - r);
    for (int i = r; i < m; ++i) {
        const std::int8_t* row = tags.data() + static_cast<std::size_t>(i) * n;
        for (int j = c; j < n; ++j) ++h.counts[static_cast<std::size_t>(row[j])];
    }
    return h;
}

struct Plan {
    LabelMap map;
    CodeTable table;
    CapacityReport report;
};

// Replays the data hider's streaming decode on paper: the FIFO buffer is
// primed with the reference-region bits beyond the header and must hold a
// full codeword before each pixel's tag can be read. Returns false on
// underflow (bootstrap starvation).
bool decode_schedule_holds(const std::vector<std::int8_t>& tags, int m, int n, int r, int c,
                           const CodeTable& table, const CapacityReport& report) {
    std::int64_t level = 8 * static_cast<std::int64_t>(report.hist.ref_count) -
                         static_cast<std::int64_t>(kAuxHeaderBits);
    if (level < 0) return false;
    std::uint64_t payload_start = report.code_bits + kAuxHeaderBits;
    std::uint64_t pos = 0;
    for (int i = r; i < m; ++i) {
        const std::int8_t* row = tags.data() + static_cast<std::size_t>(i) * n;
        for (int j = c; j < n; ++j) {
            int t = row[j];
            if (level < table.codeword(t).length) return false;
            level -= table.codeword(t).length;
            std::uint64_t k = static_cast<std::uint64_t>(capacity_of(t));
            if (pos < payload_start)
                level += static_cast<std::int64_t>(std::min(k, payload_start - pos));
            pos += k;
        }
    }
    return true;
}

// Searches reference regions from (1, 1), alternately growing rows and
// columns, each capped at 255 and at the image size.
std::optional<Plan> find_plan(const GrayImage& img) {
    const int m = img.rows(), n = img.cols();
    const std::vector<std::int8_t> tags = full_tag_field(img);
    int rmax = std::min(255, m - 1);
    int cmax = std::min(255, n - 1);
    int r = 1, c = 1;
    for (;;) {
        LabelHistogram hist = histogram_for(tags, m, n, r, c);
        CodeTable table = CodeTable::assign(hist);
        CapacityReport report = make_report(hist, r, c, table);
        bool feasible = report.net_payload_bits >= 0 &&  // aux stream fits
                        report.aux_stream_bits <= std::numeric_limits<std::uint32_t>::max() &&
                        decode_schedule_holds(tags, m, n, r, c, table, report);
        if (feasible) {
            LabelMap map(m, n, r, c);
            for (int i = r; i < m; ++i)
                for (int j = c; j < n; ++j)
                    map.set_tag(i, j, tags[static_cast<std::size_t>(i) * n + j]);
            return Plan{std::move(map), table, report};
        }
        if (r == rmax && c == cmax) return std::nullopt;
        if ((r <= c && r < rmax) || c == cmax)
            ++r;
        else
            ++c;
    }
}

}  // namespace

int capacity_of(int tag) {
    if (tag < 0 || tag > 8) throw std::invalid_argument("tag out of range");
    return std::min(tag + 1, 8);
}

std::uint8_t substitute_msbs(std::uint8_t xe, int tag, const BitVec& bits) {
    int k = capacity_of(tag);
    if (bits.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("substitute_msbs: wrong bit count");
    std::uint32_t value = 0;
    for (int s = 0; s < k; ++s) value = (value << 1) | (bits[s] ? 1u : 0u);
    return static_cast<std::uint8_t>((value << (8 - k)) | (xe & (0xFFu >> k)));
}

int recover_bit(std::uint8_t predicted, int tag) {
    if (tag < 0 || tag > 7) throw std::invalid_argument("recover_bit: tag must be <= 7");
    return 1 - ((predicted >> (7 - tag)) & 1);
}

OwnerOutput owner_encode(const GrayImage& img, const KeySpec& encryption_key) {
    auto plan = find_plan(img);
    if (!plan) throw std::runtime_error(kInsufficientBootstrap);
    const LabelMap& map = plan->map;
    int r = map.ref_rows(), c = map.ref_cols();

    // Aux stream: coded label map, then the original reference values.
    BitVec aux;
    std::vector<std::int8_t> tags;
    tags.reserve(img.pixel_count() - map.ref_count());
    for_each_nonref(map, [&](int, int, int t) { tags.push_back(static_cast<std::int8_t>(t)); });
    plan->table.encode(tags, aux);
    aux.append(pack_reference_values(img, r, c));

    BitVec storage;
    write_header(AuxHeader{r, c, plan->table, static_cast<std::uint32_t>(aux.size())}, storage);
    storage.append(aux);

    GrayImage out = xor_image(img, encryption_key);

    // The reference-region bits hold the head of the storage stream as
    // plaintext byte replacements; the rest spills into the overlay.
    std::size_t pos = 0;
    for (int i = 0; i < out.rows(); ++i) {
        for (int j = 0; j < out.cols(); ++j) {
            if (!map.is_reference(i, j)) continue;
            std::uint8_t byte = 0;
            for (int b = 0; b < 8; ++b) byte = static_cast<std::uint8_t>((byte << 1) | storage[pos++]);
            out(i, j) = byte;
        }
    }
    BitVec tail;
    for (std::size_t b = pos; b < storage.size(); ++b) tail.push_back(storage[b]);
    overlay_write(out, map, 0, tail);

    return OwnerOutput{std::move(out), plan->report};
}

DecodedLayout hider_decode_labels(const GrayImage& encoded) {
    int m = encoded.rows(), n = encoded.cols();
    int r = encoded(0, 0);
    int c = encoded(0, 1);
    if (r < 1 || c < 1 || r >= m || c >= n)
        throw std::runtime_error("invalid header: bad reference region");

    LabelMap shape(m, n, r, c);
    BitVec refbits;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (shape.is_reference(i, j)) refbits.append_uint(encoded(i, j), 8);
    if (refbits.size() < kAuxHeaderBits)
        throw std::runtime_error("invalid header: reference region cannot hold the header");

    BitReader header_in(refbits);
    AuxHeader header = read_header(header_in);
    std::uint64_t ref_value_bits = 8 * shape.ref_count();
    std::uint64_t primed = refbits.size() - kAuxHeaderBits;
    if (header.aux_len < ref_value_bits)
        throw std::runtime_error("invalid header: aux stream shorter than reference values");
    std::uint64_t payload_start = header.aux_len - primed;

    BitQueue buffer;
    for (std::size_t b = kAuxHeaderBits; b < refbits.size(); ++b) buffer.push(refbits[b]);

    LabelMap map(m, n, r, c);
    std::uint64_t pos = 0;       // overlay position
    std::uint64_t delivered = primed;
    for (int i = r; i < m; ++i) {
        for (int j = c; j < n; ++j) {
            auto tag = header.table.try_decode(buffer);
            if (!tag) throw std::runtime_error(kInsufficientBootstrap);
            map.set_tag(i, j, *tag);
            std::uint64_t k = static_cast<std::uint64_t>(capacity_of(*tag));
            std::uint64_t harvest =
                pos < payload_start ? std::min(k, payload_start - pos) : 0;
            for (std::uint64_t b = 0; b < harvest; ++b)
                buffer.push((encoded(i, j) >> (7 - static_cast<int>(b))) & 1);
            delivered += harvest;
            pos += k;
        }
    }
    if (delivered != header.aux_len) throw std::runtime_error("aux stream truncated");

    BitVec reference_values = buffer.take_remaining();
    if (reference_values.size() != ref_value_bits)
        throw std::runtime_error("aux stream truncated");

    return DecodedLayout{std::move(map), header.table, std::move(reference_values),
                         payload_start, pos};
}

EmbedResult hider_embed(const GrayImage& encoded, const BitVec& payload,
                        const KeySpec& hiding_key) {
    DecodedLayout layout = hider_decode_labels(encoded);
    std::uint64_t available = layout.overlay_bits - layout.payload_start;
    if (payload.size() + 32 > available) {
        std::uint64_t usable = available >= 32 ? available - 32 : 0;
        throw std::invalid_argument("payload exceeds capacity " + std::to_string(usable) +
                                    " bits");
    }
    BitVec segment;
    segment.append_uint(payload.size(), 32);
    segment.append(payload);

    GrayImage out = encoded;
    overlay_write(out, layout.map, layout.payload_start, xor_bits(segment, hiding_key));

    EmbedReport report{payload.size(),
                       static_cast<double>(payload.size()) /
                           static_cast<double>(encoded.pixel_count())};
    return EmbedResult{std::move(out), report};
}

BitVec receiver_extract(const GrayImage& marked, const KeySpec& hiding_key) {
    DecodedLayout layout = hider_decode_labels(marked);
    std::uint64_t available = layout.overlay_bits - layout.payload_start;
    if (available < 32) throw std::runtime_error(kExtractionFailed);

    Keystream ks(hiding_key);
    BitVec prefix = overlay_read(marked, layout.map, layout.payload_start, 32);
    std::uint64_t length = 0;
    for (int b = 0; b < 32; ++b)
        length = (length << 1) | ((prefix[b] ^ ks.next_bit()) ? 1u : 0u);
    if (length > available - 32) throw std::runtime_error(kExtractionFailed);

    BitVec ciphered = overlay_read(marked, layout.map, layout.payload_start + 32, length);
    BitVec payload;
    for (std::size_t b = 0; b < ciphered.size(); ++b)
        payload.push_back(ciphered[b] ^ ks.next_bit());
    return payload;
}

GrayImage receiver_recover(const GrayImage& marked, const KeySpec& encryption_key) {
    DecodedLayout layout = hider_decode_labels(marked);
    const LabelMap& map = layout.map;
    int m = marked.rows(), n = marked.cols();

    GrayImage out(m, n);
    BitReader ref_in(layout.reference_values);
    unpack_reference_values(ref_in, out, map.ref_rows(), map.ref_cols());

    std::vector<std::uint8_t> ks = keystream_bytes(derive_seed(encryption_key),
                                                   marked.pixel_count());
    for (int i = map.ref_rows(); i < m; ++i) {
        for (int j = map.ref_cols(); j < n; ++j) {
            int t = map.tag(i, j);
            std::uint8_t px = med_predict(out(i - 1, j - 1), out(i - 1, j), out(i, j - 1));
            if (t == 8) {
                out(i, j) = px;
                continue;
            }
            std::uint8_t dec = marked(i, j) ^ ks[static_cast<std::size_t>(i) * n + j];
            std::uint32_t low_mask = (1u << (7 - t)) - 1u;
            std::uint32_t top = px & ~((1u << (8 - t)) - 1u);
            out(i, j) = static_cast<std::uint8_t>(
                top | (static_cast<std::uint32_t>(recover_bit(px, t)) << (7 - t)) |
                (dec & low_mask));
        }
    }
    return out;
}

ImageAnalysis analyze_image(const GrayImage& img) {
    if (auto plan = find_plan(img)) {
        double er = static_cast<double>(plan->report.net_payload_bits) /
                    static_cast<double>(img.pixel_count());
        return ImageAnalysis{plan->report, true, er};
    }
    LabelHistogram hist = histogram(build_label_map(img, 1, 1));
    CodeTable table = CodeTable::assign(hist);
    CapacityReport report = make_report(hist, 1, 1, table);
    double er = static_cast<double>(report.net_payload_bits) /
                static_cast<double>(img.pixel_count());
    return ImageAnalysis{report, false, er};
}

}  // namespace hvlcl
