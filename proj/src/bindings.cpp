#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chosal/evaluation.hpp"
#include "chosal/geometry.hpp"
#include "chosal/pipeline.hpp"

namespace py = pybind11;
using namespace chosal;

namespace {

RgbImage rgb_from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 3 || arr.shape(2) != 3) {
    throw std::invalid_argument("expected an HxWx3 uint8 array");
  }
  RgbImage img(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(0)));
  std::memcpy(img.data.data(), arr.data(), img.data.size());
  return img;
}

py::array_t<double> map_to_array(const SaliencyMap& map) {
  py::array_t<double> out({map.height, map.width});
  std::memcpy(out.mutable_data(), map.values.data(), map.values.size() * sizeof(double));
  return out;
}

PipelineConfig config_from_obj(const py::object& obj) {
  if (obj.is_none()) return PipelineConfig{};
  const std::string text =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return config_from_json(text);
}

PipelineResult run_pipeline(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb,
                            const py::object& config_obj) {
  const RgbImage img = rgb_from_array(rgb);
  const PipelineConfig config = config_from_obj(config_obj);
  py::gil_scoped_release release;
  return compute_saliency_full(img, config);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Saliency maps from convex hull overlap and global contrast cues";

  m.def(
      "compute_saliency",
      [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb,
         const py::object& config) { return map_to_array(run_pipeline(rgb, config).fused); },
      py::arg("rgb"), py::arg("config") = py::none(),
      "Fused saliency map in [0,1] for an HxWx3 uint8 sRGB image.");

  m.def(
      "compute_maps",
      [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb,
         const py::object& config) {
        PipelineResult result = run_pipeline(rgb, config);
        py::dict out;
        out["cho"] = map_to_array(result.cho);
        out["gc"] = map_to_array(result.gc);
        out["saliency"] = map_to_array(result.fused);
        py::array_t<int> labels({result.base.height, result.base.width});
        std::memcpy(labels.mutable_data(), result.base.labels.data(),
                    result.base.labels.size() * sizeof(int));
        out["labels"] = labels;
        out["num_layers"] = result.hierarchy.layer_count();
        return out;
      },
      py::arg("rgb"), py::arg("config") = py::none(),
      "Cue maps, fused map, and the base segmentation labels.");

  m.def(
      "rgb_to_lab",
      [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb) {
        const RgbImage img = rgb_from_array(rgb);
        const LabImage lab = rgb_to_lab(img);
        py::array_t<double> out({lab.height, lab.width, 3});
        std::memcpy(out.mutable_data(), lab.data.data(), lab.data.size() * sizeof(double));
        return out;
      },
      py::arg("rgb"), "CIELAB (D65) values for an HxWx3 uint8 sRGB image.");

  m.def(
      "segment",
      [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& rgb,
         double scale_k, int min_size, double smooth_sigma) {
        const RgbImage img = rgb_from_array(rgb);
        py::gil_scoped_release release;
        const Segmentation seg =
            felzenszwalb_segment(rgb_to_lab(img), scale_k, min_size, smooth_sigma);
        py::gil_scoped_acquire acquire;
        py::array_t<int> out({seg.height, seg.width});
        std::memcpy(out.mutable_data(), seg.labels.data(), seg.labels.size() * sizeof(int));
        return out;
      },
      py::arg("rgb"), py::arg("scale_k") = 300.0, py::arg("min_size") = 50,
      py::arg("smooth_sigma") = 0.8,
      "Graph-based over-segmentation labels for an HxWx3 uint8 sRGB image.");

  m.def(
      "convex_hull",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& points) {
        if (points.ndim() != 2 || points.shape(1) != 2) {
          throw std::invalid_argument("expected an Nx2 array of points");
        }
        std::vector<Point> pts(points.shape(0));
        for (py::ssize_t i = 0; i < points.shape(0); ++i) {
          pts[i] = {points.at(i, 0), points.at(i, 1)};
        }
        const HullPoly hull = convex_hull(pts);
        py::array_t<double> vertices({static_cast<py::ssize_t>(hull.vertices.size()),
                                      static_cast<py::ssize_t>(2)});
        for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
          vertices.mutable_at(i, 0) = hull.vertices[i].x;
          vertices.mutable_at(i, 1) = hull.vertices[i].y;
        }
        return py::make_tuple(vertices, hull.degenerate);
      },
      py::arg("points"),
      "(vertices, degenerate): CCW hull vertices of an Nx2 point set.");

  m.def("f_measure", &f_measure, py::arg("precision"), py::arg("recall"), py::arg("beta2") = 0.3);

  m.def(
      "pr_curve",
      [](const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& map,
         const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>& gt) {
        if (map.ndim() != 2 || gt.ndim() != 2 || map.shape(0) != gt.shape(0) ||
            map.shape(1) != gt.shape(1)) {
          throw std::invalid_argument("expected two HxW arrays of equal shape");
        }
        GrayImage gray(static_cast<int>(map.shape(1)), static_cast<int>(map.shape(0)));
        std::memcpy(gray.data.data(), map.data(), gray.data.size());
        BinaryMask mask(gray.width, gray.height);
        for (std::size_t i = 0; i < mask.data.size(); ++i) mask.data[i] = gt.data()[i] ? 1 : 0;
        const PrCurve curve = pr_curve(gray, mask);
        py::array_t<double> precision(256), recall(256);
        for (int t = 0; t < 256; ++t) {
          precision.mutable_at(t) = curve.points[t].precision;
          recall.mutable_at(t) = curve.points[t].recall;
        }
        return py::make_tuple(precision, recall);
      },
      py::arg("map"), py::arg("gt"),
      "(precision[256], recall[256]) over the strict threshold sweep.");

  m.def(
      "default_config",
      [] {
        return py::module_::import("json")
            .attr("loads")(config_to_json(PipelineConfig{}));
      },
      "Pipeline defaults as a dict; pass an edited copy back as `config`.");

  m.attr("__version__") = "0.1.0";
}
