// Copyright 2026 The rofc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rofc/errors.hpp"
#include "rofc/eval.hpp"
#include "rofc/record_store.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "cancelable biometric templates with fuzzy-commitment key binding";

  py::register_exception<rofc::Error>(m, "Error", PyExc_ValueError);

  py::class_<rofc::BitString>(m, "BitString")
      .def(py::init([](const std::string &s) {
        return rofc::BitString::from_string(s);
      }))
      .def_static("random",
                  [](std::size_t n) { return rofc::BitString::random(n); })
      .def("__len__", &rofc::BitString::size)
      .def("__str__", &rofc::BitString::to_string)
      .def("__eq__", [](const rofc::BitString &a,
                        const rofc::BitString &b) { return a == b; })
      .def("__xor__", [](const rofc::BitString &a,
                         const rofc::BitString &b) { return a ^ b; })
      .def("hamming", &rofc::BitString::hamming)
      .def("weight", &rofc::BitString::weight);

  py::class_<rofc::Seed>(m, "Seed")
      .def_static("random", &rofc::Seed::random)
      .def_static("from_hex", &rofc::Seed::from_hex)
      .def("to_hex", &rofc::Seed::to_hex)
      .def("__eq__", [](const rofc::Seed &a, const rofc::Seed &b) {
        return a == b;
      });

  py::class_<rofc::CodecSpec>(m, "CodecSpec")
      .def_static("repetition", &rofc::CodecSpec::repetition)
      .def_static("hamming74", &rofc::CodecSpec::hamming74)
      .def_static("concat", &rofc::CodecSpec::concat)
      .def_static("parse", &rofc::CodecSpec::parse)
      .def_static("fit", &rofc::CodecSpec::fit)
      .def_property_readonly("message_bits", &rofc::CodecSpec::message_bits)
      .def_property_readonly("codeword_bits", &rofc::CodecSpec::codeword_bits)
      .def_property_readonly("repetition_factor",
                             &rofc::CodecSpec::repetition_factor)
      .def_property_readonly("name", &rofc::CodecSpec::name);

  m.def("encode", &rofc::encode);
  m.def("decode", [](const rofc::CodecSpec &spec, const rofc::BitString &w)
            -> std::optional<std::pair<rofc::BitString, std::size_t>> {
    auto r = rofc::decode(spec, w);
    if (!r) return std::nullopt;
    return std::make_pair(std::move(r->message), r->corrected);
  });

  py::class_<rofc::HelperData>(m, "HelperData")
      .def_readonly("hd_bits", &rofc::HelperData::hd_bits)
      .def_readonly("codec", &rofc::HelperData::codec)
      .def_property_readonly("key_digest", [](const rofc::HelperData &hd) {
        return py::bytes(
            reinterpret_cast<const char *>(hd.key_digest.data()),
            hd.key_digest.size());
      });

  m.def("commit", &rofc::commit);
  m.def("recover", &rofc::recover);
  m.def("verify", &rofc::verify);

  py::class_<rofc::QuantizerSettings>(m, "QuantizerSettings")
      .def(py::init<>())
      .def_readwrite("bits_per_component",
                     &rofc::QuantizerSettings::bits_per_component)
      .def_readwrite("range_halfwidth",
                     &rofc::QuantizerSettings::range_halfwidth);

  py::class_<rofc::DeviceRecord>(m, "DeviceRecord")
      .def_readonly("user_id", &rofc::DeviceRecord::user_id)
      .def_readonly("seed", &rofc::DeviceRecord::seed)
      .def_readonly("created_at", &rofc::DeviceRecord::created_at);

  py::class_<rofc::ServerRecord>(m, "ServerRecord")
      .def_readonly("user_id", &rofc::ServerRecord::user_id)
      .def_readonly("helper", &rofc::ServerRecord::helper)
      .def_readonly("dim", &rofc::ServerRecord::dim)
      .def_readonly("truncation_len", &rofc::ServerRecord::truncation_len)
      .def_readonly("version", &rofc::ServerRecord::version)
      .def_readonly("revoked", &rofc::ServerRecord::revoked);

  py::class_<rofc::EnrollmentResult>(m, "EnrollmentResult")
      .def_readonly("device", &rofc::EnrollmentResult::device)
      .def_readonly("server", &rofc::EnrollmentResult::server);

  py::class_<rofc::AuthDecision>(m, "AuthDecision")
      .def_readonly("accepted", &rofc::AuthDecision::accepted)
      .def_readonly("corrected_bits", &rofc::AuthDecision::corrected_bits)
      .def_property_readonly(
          "failure_reason",
          [](const rofc::AuthDecision &d) -> std::optional<std::string> {
            if (!d.failure_reason) return std::nullopt;
            return rofc::to_string(*d.failure_reason);
          });

  m.def("enroll", &rofc::enroll);
  m.def("authenticate", &rofc::authenticate);
  m.def("revoke_and_reissue", &rofc::revoke_and_reissue);

  py::class_<rofc::Dataset::Subject>(m, "Subject")
      .def_readonly("id", &rofc::Dataset::Subject::id)
      .def_readonly("samples", &rofc::Dataset::Subject::samples);

  py::class_<rofc::Dataset>(m, "Dataset")
      .def_readonly("subjects", &rofc::Dataset::subjects)
      .def_readonly("dim", &rofc::Dataset::dim);

  py::class_<rofc::RatePoint>(m, "RatePoint")
      .def_readonly("knob", &rofc::RatePoint::knob)
      .def_readonly("far", &rofc::RatePoint::far)
      .def_readonly("frr", &rofc::RatePoint::frr);

  py::class_<rofc::RateCurve>(m, "RateCurve")
      .def_readonly("points", &rofc::RateCurve::points)
      .def_readonly("num_genuine", &rofc::RateCurve::num_genuine)
      .def_readonly("num_impostor", &rofc::RateCurve::num_impostor);

  py::class_<rofc::EerResult>(m, "EerResult")
      .def_readonly("eer", &rofc::EerResult::eer)
      .def_readonly("knob_at_eer", &rofc::EerResult::knob_at_eer);

  m.def("gen_synthetic", &rofc::gen_synthetic);
  m.def("threshold_schedule", &rofc::threshold_schedule);
  m.def("baseline_rates", &rofc::baseline_rates);
  m.def("protected_rates", &rofc::protected_rates);
  m.def("compute_eer", [](const rofc::RateCurve &curve) {
    return rofc::compute_eer(curve);
  });
  m.def("load_dataset", &rofc::load_dataset);
  m.def("save_dataset", &rofc::save_dataset);
}
