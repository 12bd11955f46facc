#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <stdexcept>

#include "hvlcl/hvlcl.hpp"

namespace py = pybind11;
using namespace hvlcl;

namespace {

using ImageArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

GrayImage to_image(const ImageArray& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D uint8 array");
    auto m = static_cast<int>(arr.shape(0));
    auto n = static_cast<int>(arr.shape(1));
    std::vector<std::uint8_t> px(static_cast<std::size_t>(m) * n);
    std::memcpy(px.data(), arr.data(), px.size());
    return GrayImage(m, n, std::move(px));
}

py::array_t<std::uint8_t> from_image(const GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.rows(), img.cols()});
    std::memcpy(arr.mutable_data(), img.pixels().data(), img.pixel_count());
    return arr;
}

KeySpec to_key(const py::bytes& key) {
    std::string raw = key;
    KeySpec spec;
    spec.bytes.assign(raw.begin(), raw.end());
    return spec;
}

BitVec to_bits(const py::bytes& data, std::optional<std::uint64_t> nbits) {
    std::string raw = data;
    std::span<const std::uint8_t> bytes{reinterpret_cast<const std::uint8_t*>(raw.data()),
                                        raw.size()};
    return BitVec::from_bytes(bytes, nbits.value_or(raw.size() * 8));
}

py::bytes bytes_of(std::span<const std::uint8_t> data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

py::dict report_dict(const CapacityReport& rep) {
    py::dict d;
    d["ref_rows"] = rep.ref_rows;
    d["ref_cols"] = rep.ref_cols;
    d["ref_count"] = rep.hist.ref_count;
    py::list counts;
    for (auto c : rep.hist.counts) counts.append(c);
    d["counts"] = counts;
    d["total_capacity_bits"] = rep.total_capacity_bits;
    d["code_bits"] = rep.code_bits;
    d["aux_stream_bits"] = rep.aux_stream_bits;
    d["header_bits"] = rep.header_bits;
    d["net_payload_bits"] = rep.net_payload_bits;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hvlcl, m) {
    m.doc() = "Reversible data hiding in encrypted images with adaptive "
              "multi-MSB labeling and a Huffman-coded label map";

    m.def("read_pgm", [](const py::bytes& data) {
        std::string raw = data;
        return from_image(read_pgm({reinterpret_cast<const std::uint8_t*>(raw.data()),
                                    raw.size()}));
    }, py::arg("data"), "Parse a binary PGM (P5) byte string into a 2-D uint8 array.");

    m.def("write_pgm", [](const ImageArray& img) {
        auto bytes = write_pgm(to_image(img));
        return bytes_of(bytes);
    }, py::arg("image"), "Serialize a 2-D uint8 array as binary PGM (P5).");

    m.def("med_predict", &med_predict, py::arg("top_left"), py::arg("top"), py::arg("left"));
    m.def("label_of", &label_of, py::arg("x"), py::arg("px"),
          "Shared MSB prefix length between a pixel and its prediction.");
    m.def("capacity_of", &capacity_of, py::arg("tag"));

    m.def("build_label_map", [](const ImageArray& img, int ref_rows, int ref_cols) {
        LabelMap map = build_label_map(to_image(img), ref_rows, ref_cols);
        py::array_t<std::int8_t> arr({map.rows(), map.cols()});
        std::memcpy(arr.mutable_data(), map.cells().data(), map.cells().size());
        return arr;
    }, py::arg("image"), py::arg("ref_rows") = 1, py::arg("ref_cols") = 1,
       "Per-pixel tag map; reference cells hold -1.");

    m.def("owner_encode", [](const ImageArray& img, const py::bytes& key) {
        OwnerOutput out = owner_encode(to_image(img), to_key(key));
        return py::make_tuple(from_image(out.image), report_dict(out.report));
    }, py::arg("image"), py::arg("key"),
       "Content-owner stage: returns (encoded_image, capacity_report).");

    m.def("hider_embed", [](const ImageArray& img, const py::bytes& payload, const py::bytes& key,
                            std::optional<std::uint64_t> payload_bits) {
        EmbedResult out = hider_embed(to_image(img), to_bits(payload, payload_bits), to_key(key));
        py::dict rep;
        rep["payload_bits"] = out.report.payload_bits;
        rep["embedding_rate"] = out.report.embedding_rate;
        return py::make_tuple(from_image(out.image), rep);
    }, py::arg("image"), py::arg("payload"), py::arg("key"), py::arg("payload_bits") = py::none(),
       "Data-hider stage: returns (marked_image, embed_report).");

    m.def("receiver_extract", [](const ImageArray& img, const py::bytes& key) {
        BitVec payload = receiver_extract(to_image(img), to_key(key));
        return py::make_tuple(bytes_of(payload.bytes()), payload.size());
    }, py::arg("image"), py::arg("key"),
       "Receiver data path: returns (payload_bytes, payload_bits); needs only the hiding key.");

    m.def("receiver_recover", [](const ImageArray& img, const py::bytes& key) {
        return from_image(receiver_recover(to_image(img), to_key(key)));
    }, py::arg("image"), py::arg("key"),
       "Receiver image path: bit-exact original image; needs only the encryption key.");

    m.def("analyze_image", [](const ImageArray& img) {
        ImageAnalysis a = analyze_image(to_image(img));
        py::dict d = report_dict(a.report);
        d["feasible"] = a.feasible;
        d["er_bpp"] = a.er_bpp;
        return d;
    }, py::arg("image"), "Capacity statistics and bootstrap feasibility.");

    m.def("psnr", [](const ImageArray& a, const ImageArray& b) {
        return psnr(to_image(a), to_image(b));
    }, py::arg("a"), py::arg("b"));

    m.def("ssim", [](const ImageArray& a, const ImageArray& b) {
        return ssim(to_image(a), to_image(b));
    }, py::arg("a"), py::arg("b"));

    m.def("embedding_rate", &embedding_rate, py::arg("payload_bits"), py::arg("rows"),
          py::arg("cols"));

    m.def("keystream_bytes", [](std::uint64_t seed, std::size_t count) {
        return bytes_of(keystream_bytes(seed, count));
    }, py::arg("seed"), py::arg("count"), "Deterministic keyed byte stream (test/diagnostic).");
}
