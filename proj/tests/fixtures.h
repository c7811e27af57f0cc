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

// Component specifications shared by the unit and acceptance tests.

#ifndef RAIS_TESTS_FIXTURES_H_
#define RAIS_TESTS_FIXTURES_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace rais::testing {

inline const std::string kCorpusDir = RAIS_CORPUS_DIR;

inline constexpr std::string_view kFixtureA = R"(package Int_Stack is
   type Stack is private;
   procedure Push (S : in out Stack; X : in Integer);
   procedure Pop (S : in out Stack; X : out Integer);
private
   type Stack is array (1 .. 100) of Integer;
end Int_Stack;
)";

// Satisfies every guideline applicable to a static structure once a dynamic
// sibling is known to exist.
inline constexpr std::string_view kCompleteStatic = R"(generic
   type Element is private;
package Bounded_Stack is
   type Stack is private;
   Overflow, Underflow : exception;
   function Create return Stack;
   procedure Destroy (S : in out Stack);
   procedure Convert (Source : in Stack; Target : out Stack);
   function Is_Empty (S : in Stack) return Boolean;
   procedure Push (S : in out Stack; X : in Element);
   --| raises: Overflow
   procedure Pop (S : in out Stack; X : out Element);
   --| raises: Underflow
   procedure Put (S : in Stack);
private
   type Stack is array (1 .. 100) of Element;
end Bounded_Stack;
)";

// Fixture B: generic dynamic list, complete except Release_Free_List.
inline constexpr std::string_view kFixtureB = R"(generic
   type Element is private;
package Dyn_List is
   type List is limited private;
   Storage_Exhausted : exception;
   function Create return List;
   procedure Destroy (L : in out List);
   procedure Convert (Source : in List; Target : out List);
   function Is_Empty (L : in List) return Boolean;
   procedure Insert (L : in out List; Item : in Element);
   --| raises: Storage_Exhausted
   procedure Remove (L : in out List; Item : out Element);
   procedure Put (L : in List);
   procedure Set_Max_Free_List_Size (N : in Natural);
private
   type Node is record
      Item : Element;
      Next : List;
   end record;
   type List is access Node;
end Dyn_List;
)";

inline std::string Replace(std::string text, std::string_view from,
                           std::string_view to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

inline std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteText(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// A fresh, empty directory under the system temp directory.
inline std::filesystem::path ScratchDir(std::string_view tag) {
  static std::mt19937_64 rng(std::random_device{}());
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("rais_" + std::string(tag) + "_" +
                               std::to_string(rng()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace rais::testing

#endif  // RAIS_TESTS_FIXTURES_H_
