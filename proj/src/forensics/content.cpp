#include "texguard/forensics/content.hpp"

#include <optional>

#include "texguard/pdf/object.hpp"
#include "texguard/pdf/syntax.hpp"

namespace texguard::forensics {

namespace {

using pdf::Value;

enum class ColorSpace { Gray, Rgb, Cmyk, Other };

struct GraphicsState {
  ColorSpace space = ColorSpace::Gray;
  std::vector<double> fill{0.0};
  int render_mode = 0;
};

bool is_white(const GraphicsState& gs, double threshold) {
  const auto& c = gs.fill;
  ColorSpace space = gs.space;
  if (space == ColorSpace::Other) {
    // Unknown spaces are judged by their component count.
    space = c.size() == 1 ? ColorSpace::Gray
            : c.size() == 3 ? ColorSpace::Rgb
            : c.size() == 4 ? ColorSpace::Cmyk
                            : ColorSpace::Other;
  }
  switch (space) {
    case ColorSpace::Gray:
    case ColorSpace::Rgb:
      if (c.empty()) return false;
      for (double v : c) {
        if (v < threshold) return false;
      }
      return true;
    case ColorSpace::Cmyk:
      if (c.size() != 4) return false;
      for (double v : c) {
        if (v > 1.0 - threshold) return false;
      }
      return true;
    case ColorSpace::Other:
      return false;
  }
  return false;
}

ColorSpace space_from_name(std::string_view name) {
  if (name == "DeviceGray" || name == "G" || name == "CalGray") return ColorSpace::Gray;
  if (name == "DeviceRGB" || name == "RGB" || name == "CalRGB") return ColorSpace::Rgb;
  if (name == "DeviceCMYK" || name == "CMYK") return ColorSpace::Cmyk;
  return ColorSpace::Other;
}

std::vector<double> initial_fill(ColorSpace space) {
  switch (space) {
    case ColorSpace::Gray: return {0.0};
    case ColorSpace::Rgb: return {0.0, 0.0, 0.0};
    case ColorSpace::Cmyk: return {0.0, 0.0, 0.0, 1.0};
    case ColorSpace::Other: return {};
  }
  return {};
}

bool is_regular(char c) { return !pdf::is_pdf_space(c) && !pdf::is_pdf_delimiter(c); }

class Interpreter {
 public:
  Interpreter(std::string_view content, double threshold)
      : content_(content), threshold_(threshold), reader_(content) {}

  ContentScan run() {
    while (true) {
      reader_.skip_space();
      if (reader_.at_end()) break;
      const std::size_t at = reader_.pos();
      const char c = content_[at];
      const bool operand_start = c == '/' || c == '(' || c == '<' || c == '[' || c == '+' ||
                                 c == '-' || c == '.' || (c >= '0' && c <= '9');
      if (operand_start) {
        if (operands_.empty()) operand_offset_ = at;
        auto value = reader_.value();
        if (!value) {
          scan_.error = reader_.error();
          break;
        }
        operands_.push_back(std::move(*value));
        continue;
      }
      std::size_t end = at;
      while (end < content_.size() && is_regular(content_[end])) ++end;
      if (end == at) {
        scan_.error = "unexpected delimiter at offset " + std::to_string(at);
        break;
      }
      const std::string_view word = content_.substr(at, end - at);
      reader_.seek(end);
      if (word == "true" || word == "false" || word == "null") {
        if (operands_.empty()) operand_offset_ = at;
        operands_.push_back(word == "null" ? Value(pdf::Null{}) : Value(word == "true"));
        continue;
      }
      if (!apply(word)) break;
      operands_.clear();
    }
    close_run();
    return std::move(scan_);
  }

 private:
  std::vector<double> numbers() const {
    std::vector<double> out;
    for (const auto& v : operands_) {
      if (auto n = v.as_number()) out.push_back(*n);
    }
    return out;
  }

  void set_fill(ColorSpace space, std::vector<double> components) {
    gs_.space = space;
    gs_.fill = std::move(components);
  }

  void show(const std::string& bytes) {
    std::optional<HiddenReason> reason;
    if (gs_.render_mode == 3) {
      reason = HiddenReason::InvisibleMode;
    } else if (is_white(gs_, threshold_)) {
      reason = HiddenReason::WhiteFill;
    }
    if (!reason) {
      close_run();
      return;
    }
    if (!run_) run_ = InvisibleText{std::string(), operand_offset_, *reason};
    run_->bytes += bytes;
  }

  void close_run() {
    if (run_) scan_.runs.push_back(std::move(*run_));
    run_.reset();
  }

  bool skip_inline_image() {
    // Dictionary pairs up to ID, then binary data up to a delimited EI.
    const std::size_t id = pdf::find_keyword(content_, "ID", reader_.pos());
    if (id == std::string_view::npos) {
      scan_.error = "inline image without ID";
      return false;
    }
    std::size_t p = id + 3;
    while (p + 1 < content_.size()) {
      const std::size_t ei = content_.find("EI", p);
      if (ei == std::string_view::npos) break;
      const bool left = ei > 0 && pdf::is_pdf_space(content_[ei - 1]);
      const bool right = ei + 2 >= content_.size() || pdf::is_pdf_space(content_[ei + 2]);
      if (left && right) {
        reader_.seek(ei + 2);
        return true;
      }
      p = ei + 1;
    }
    scan_.error = "inline image without EI";
    return false;
  }

  bool apply(std::string_view op) {
    if (op == "q") {
      stack_.push_back(gs_);
    } else if (op == "Q") {
      if (!stack_.empty()) {
        gs_ = stack_.back();
        stack_.pop_back();
      }
    } else if (op == "BT") {
      close_run();
    } else if (op == "ET") {
      close_run();
    } else if (op == "g") {
      set_fill(ColorSpace::Gray, numbers());
    } else if (op == "rg") {
      set_fill(ColorSpace::Rgb, numbers());
    } else if (op == "k") {
      set_fill(ColorSpace::Cmyk, numbers());
    } else if (op == "cs") {
      const auto name = operands_.empty() ? std::nullopt : operands_.back().as_name();
      const ColorSpace space = name ? space_from_name(*name) : ColorSpace::Other;
      set_fill(space, initial_fill(space));
    } else if (op == "sc" || op == "scn") {
      gs_.fill = numbers();
    } else if (op == "Tr") {
      const auto n = operands_.empty() ? std::nullopt : operands_.back().as_int();
      gs_.render_mode = n ? static_cast<int>(*n) : 0;
    } else if (op == "Tj" || op == "'" || op == "\"") {
      const auto* s = operands_.empty() ? nullptr : operands_.back().as_string();
      if (s) show(s->bytes);
    } else if (op == "TJ") {
      const auto* array = operands_.empty() ? nullptr : operands_.back().as_array();
      if (array) {
        std::string joined;
        for (const auto& item : *array) {
          if (const auto* s = item.as_string()) joined += s->bytes;
        }
        show(joined);
      }
    } else if (op == "BI") {
      return skip_inline_image();
    }
    return true;
  }

  std::string_view content_;
  double threshold_;
  pdf::SyntaxReader reader_;
  std::vector<Value> operands_;
  std::size_t operand_offset_ = 0;
  GraphicsState gs_;
  std::vector<GraphicsState> stack_;
  std::optional<InvisibleText> run_;
  ContentScan scan_;
};

}  // namespace

ContentScan find_invisible_text(std::string_view content, double white_threshold) {
  return Interpreter(content, white_threshold).run();
}

}  // namespace texguard::forensics
