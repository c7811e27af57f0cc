// Copyright 2026 The RAIS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "fixtures.h"
#include "rais/component_model.h"
#include "rais/parser.h"
#include "rais/printer.h"

namespace rais {
namespace {

ParsedUnit Parse(std::string_view text) { return ParseComponent(text, "t.ads"); }

// Wraps declarations into a package with a private Stack type.
std::string StackPackage(std::string_view decls,
                         std::string_view full_view =
                             "array (1 .. 10) of Integer") {
  return "package P is\n   type Stack is private;\n" + std::string(decls) +
         "private\n   type Stack is " + std::string(full_view) + ";\nend P;\n";
}

OperationClass ClassOf(std::string_view profile, const OverrideSet& o = {}) {
  ParsedUnit u = Parse(StackPackage(std::string(profile) + ";\n"));
  return ClassifyOperation(*Subprograms(u).front(), "Stack", o).op_class;
}

TEST_CASE("fixture A model") {
  ParsedUnit u = Parse(testing::kFixtureA);
  ComponentModel m = BuildModel(u);
  CHECK(m.adt_name == "Stack");
  CHECK(m.adt_privacy == Privacy::kPrivate);
  CHECK(m.structure_kind == StructureKind::kStatic);
  CHECK(m.is_complex);
  CHECK(m.element_type == "Integer");
  CHECK_FALSE(m.is_generic);
  CHECK_FALSE(m.element_is_generic_formal);
  CHECK(m.element_independent_ops);
  REQUIRE(m.classified_ops.size() == 2);
  CHECK(m.classified_ops[0].op_class == OperationClass::kStateChange);
  CHECK(m.classified_ops[1].op_class == OperationClass::kStateChange);
}

TEST_CASE("fixture B model") {
  ParsedUnit u = Parse(testing::kFixtureB);
  ComponentModel m = BuildModel(u);
  CHECK(m.adt_name == "List");
  CHECK(m.adt_privacy == Privacy::kLimitedPrivate);
  CHECK(m.structure_kind == StructureKind::kDynamic);
  CHECK(m.is_generic);
  CHECK(m.element_type == "Element");
  CHECK(m.element_is_generic_formal);
  CHECK(m.exceptions == std::vector<std::string>{"Storage_Exhausted"});
}

TEST_CASE("no abstraction") {
  ParsedUnit u = Parse("package P is end P;");
  CHECK_THROWS_WITH_AS(BuildModel(u), doctest::Contains("no abstraction"),
                       ModelError);
}

TEST_CASE("override naming an unknown subprogram") {
  ParsedUnit u = Parse(testing::kFixtureA);
  OverrideSet o;
  o.op_class_overrides["Peek"] = OperationClass::kStateInquiry;
  CHECK_THROWS_AS(BuildModel(u, o), ModelError);
}

TEST_CASE("primary abstraction selection") {
  ParsedUnit u = Parse(
      "package P is\n   type Count is range 0 .. 9;\n   type Bag is private;\n"
      "private\n   type Bag is array (1 .. 9) of Count;\nend P;");
  ComponentModel m = BuildModel(u);
  CHECK(m.adt_name == "Bag");
  CHECK(m.element_type == "Count");
  CHECK(m.unanalyzed_types.empty());

  ParsedUnit v = Parse("package Q is\n   type Count is range 0 .. 9;\n"
                       "   type Pair is record\n      A : Count;\n   end record;\nend Q;");
  ComponentModel n = BuildModel(v);
  CHECK(n.adt_name == "Count");
  CHECK(n.adt_privacy == Privacy::kNotPrivate);
}

TEST_CASE("other private types are reported as unanalyzed") {
  ParsedUnit u = Parse("package P is\n   type Bag is private;\n   type Cursor is private;\n"
                       "private\n   type Bag is array (1 .. 9) of Integer;\n"
                       "   type Cursor is range 0 .. 9;\nend P;");
  ComponentModel m = BuildModel(u);
  CHECK(m.adt_name == "Bag");
  CHECK(m.unanalyzed_types == std::vector<std::string>{"Cursor"});
}

TEST_CASE("structure kind") {
  auto kind = [](std::string_view text) {
    ParsedUnit u = Parse(text);
    return BuildModel(u).structure_kind;
  };
  CHECK(kind(StackPackage("", "array (1 .. 100) of Integer")) == StructureKind::kStatic);
  CHECK(kind(StackPackage("", "access Integer")) == StructureKind::kDynamic);
  CHECK(kind(StackPackage("", "record\n      Top : Natural;\n   end record")) ==
        StructureKind::kStatic);
  CHECK(kind("package P is\n   type T is limited private;\nend P;") ==
        StructureKind::kDynamic);
  CHECK(kind("package P is\n   type T is private;\nend P;") == StructureKind::kUnknown);
  CHECK(kind(R"(package P is
   type T is private;
private
   type Cell is range 0 .. 7;
end P;)") == StructureKind::kUnknown);
  // A record holding a declared access type.
  CHECK(kind(R"(package P is
   type T is private;
private
   type Link is access Integer;
   type T is record
      Head : Link;
      Size : Natural;
   end record;
end P;)") == StructureKind::kDynamic);

  ParsedUnit u = Parse(testing::kFixtureA);
  OverrideSet o;
  o.structure_kind = StructureKind::kDynamic;
  CHECK(DetectStructureKind(u, "Stack", o) == StructureKind::kDynamic);
}

TEST_CASE("classification decision table") {
  using C = OperationClass;
  CHECK(ClassOf("procedure Push (S : in out Stack; X : in Integer)") == C::kStateChange);
  CHECK(ClassOf("function Is_Empty (S : in Stack) return Boolean") == C::kStateInquiry);
  CHECK(ClassOf("function Create return Stack") == C::kCreation);
  CHECK(ClassOf("function Empty_Stack return Stack") == C::kCreation);
  CHECK(ClassOf("procedure Initialize (S : out Stack)") == C::kCreation);
  CHECK(ClassOf("procedure Clear (S : in out Stack)") == C::kTermination);
  CHECK(ClassOf("procedure Free (S : in out Stack)") == C::kTermination);
  CHECK(ClassOf("function To_String (S : Stack) return String") == C::kConversion);
  CHECK(ClassOf("procedure Get (S : in out Stack)") == C::kInputOutput);
  CHECK(ClassOf("function Image (S : Stack) return String") == C::kInputOutput);
  CHECK(ClassOf("function Depth (S : Stack) return Natural") == C::kStateInquiry);
  CHECK(ClassOf("function Top (S : in out Stack) return Integer") == C::kStateInquiry);
  CHECK(ClassOf("procedure Swap (A, B : in out Stack)") == C::kStateChange);
  CHECK(ClassOf("procedure Log (Message : String)") == C::kUnclassified);
  CHECK(ClassOf("function Max (A, B : Integer) return Integer") == C::kUnclassified);
}

TEST_CASE("overrides are absolute") {
  OverrideSet o;
  o.op_class_overrides["Create"] = OperationClass::kInputOutput;
  CHECK(ClassOf("function Create return Stack", o) == OperationClass::kInputOutput);
  o.op_class_overrides.clear();
  o.op_class_overrides["create"] = OperationClass::kTermination;
  CHECK(ClassOf("function Create return Stack", o) == OperationClass::kTermination);
}

TEST_CASE("classification is stable under round trip") {
  ParsedUnit u = Parse(testing::kCompleteStatic);
  ParsedUnit v = Parse(PrettyPrint(u));
  ComponentModel a = BuildModel(u);
  ComponentModel b = BuildModel(v);
  REQUIRE(a.classified_ops.size() == b.classified_ops.size());
  for (size_t i = 0; i < a.classified_ops.size(); ++i) {
    CHECK(a.classified_ops[i].op_class == b.classified_ops[i].op_class);
  }
}

TEST_CASE("element independence") {
  ParsedUnit u = Parse(testing::kFixtureA);
  CHECK(BuildModel(u).element_independent_ops);
  OverrideSet o;
  o.element_independence = false;
  CHECK_FALSE(BuildModel(u, o).element_independent_ops);

  ParsedUnit sum = Parse(StackPackage("   function Sum (S : Stack) return Integer;\n",
                                      "array (1 .. 10) of Integer"));
  ComponentModel m = BuildModel(sum);
  CHECK(m.element_independent_ops);
  CHECK(m.independence_assumed);

  // The element used as an index type is a dependency.
  ParsedUnit idx = Parse(R"(package P is
   type Stack is private;
   type Histogram is array (Integer range <>) of Natural;
   procedure Fill (S : in out Stack; H : out Histogram);
private
   type Stack is array (1 .. 10) of Integer;
end P;)");
  CHECK_FALSE(BuildModel(idx).element_independent_ops);
}

TEST_CASE("element inference prefers overrides and formals") {
  ParsedUnit u = Parse(testing::kFixtureA);
  OverrideSet o;
  o.element_type = "Natural";
  CHECK(BuildModel(u, o).element_type == "Natural");

  ParsedUnit g = Parse(R"(generic
   type Item is private;
package Box is
   type Box_Type is limited private;
end Box;)");
  ComponentModel m = BuildModel(g);
  CHECK(m.element_type == "Item");
  CHECK(m.element_is_generic_formal);
}

TEST_CASE("operation class names parse loosely") {
  CHECK(ParseOperationClass("state-inquiry") == OperationClass::kStateInquiry);
  CHECK(ParseOperationClass("InputOutput") == OperationClass::kInputOutput);
  CHECK(ParseOperationClass("input_output") == OperationClass::kInputOutput);
  CHECK_FALSE(ParseOperationClass("sorting"));
}

TEST_CASE("sibling base names") {
  CHECK(SiblingBaseName("Int_Stack") == "int_stack");
  CHECK(SiblingBaseName("Dyn_List_Static") == "dyn_list");
  CHECK(SiblingBaseName("Queue_Dynamic") == "queue");
}

TEST_CASE("sibling lookup in the corpus") {
  const std::filesystem::path dir = testing::kCorpusDir;
  ParsedUnit u = ParseComponent(testing::ReadText(dir / "dyn_list.ads"), "dyn_list.ads");
  SiblingContext ctx = FindSiblings(u, dir, dir / "dyn_list.ads");
  CHECK(ctx.static_sibling_exists);
  ParsedUnit a = ParseComponent(testing::ReadText(dir / "int_stack.ads"), "int_stack.ads");
  SiblingContext none = FindSiblings(a, dir, dir / "int_stack.ads");
  CHECK_FALSE(none.static_sibling_exists);
  CHECK_FALSE(none.dynamic_sibling_exists);
}

}  // namespace
}  // namespace rais
