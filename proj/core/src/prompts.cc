// Copyright 2026 The LPPA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lppa/prompts.h"

namespace lppa::prompts {

const std::string_view kTaskSystem =
    "You are an experienced doctor who helps with PHI annotation.";

const std::string_view kTaskUserPrefix =
    "You are helping with Personal Health Information(PHI) Annotation. You "
    "will receive a piece of clinical note, please follow the instructions "
    "below:\n"
    "1. Identify and extract the following entity types: [\"PERSON\", "
    "\"LOCATION\", \"ORGANIZATION\", \"AGE\", \"PHONE_NUMBER\", \"EMAIL\", "
    "\"DATE_TIME\", \"ZIP\", \"PROFESSION\", \"USERNAME\", \"ID\", \"URL\"]\n"
    "2. Ensure that each identified entity is categorized under the correct "
    "entity type from the list above.\n"
    "3. Extract all possible instances of the specified entity types from the "
    "clinical note. Even if there is some uncertainty, it's important to "
    "include any entity that could potentially belong to one of the listed "
    "categories.\n"
    "4. Make sure that the entities identified and extracted are as accurate "
    "as possible, but focus on ensuring no relevant entities are missing.\n"
    "5. Your output must be a JSON dictionary where the keys are the "
    "specified entity types, and the values are lists of the corresponding "
    "identified entities. No explanation needed.\n"
    "Here is the clinical note:";

const std::string_view kAegSystem =
    "Act as an experienced doctor. Your goal is to generate simulated "
    "clinical notes. A clinical note contains Protected Health Information "
    "(PHI), which includes the following entity types: 'PERSON', 'LOCATION', "
    "'ORGANIZATION', 'AGE', 'PHONE_NUMBER', 'EMAIL', 'DATE_TIME', 'ZIP', "
    "'PROFESSION', 'USERNAME', 'ID', 'URL'.\n"
    "You are asked to generate simulated clinical notes with PHI information "
    "and then extract all PHI entities within the simulated clinical notes "
    "and store them in a dictionary.\n"
    "The expected output format is: Clinical Note: Simulated_Note, PHI: "
    "Note_PHI, where Simulated_Note is the simulated note, and Note_PHI is a "
    "dictionary containing all PHI elements within the corresponding "
    "simulated note.\n"
    "Dictionary Note_PHI should only include the following keys: 'PERSON', "
    "'LOCATION', 'ORGANIZATION', 'AGE', 'PHONE_NUMBER', 'EMAIL', "
    "'DATE_TIME', 'ZIP', 'PROFESSION', 'USERNAME', 'ID', 'URL'.\n"
    "For the 'PERSON' entity type, there are two special cases: 1. When you "
    "generate 'Dr. John', you should only extract 'John' as a PHI element; "
    "2. When you generate 'Mr. John', you should take 'Mr. John' as a PHI "
    "element.\n"
    "Here are some sample answers I want:\n"
    "Clinical Note: \"Chief Complaint: Cardiac Arrest...\", PHI: "
    "{\"PERSON\":[\"John Doe\", \"Swift\"], \"ORGANIZATION\":[\"hospital\"], "
    "\"AGE\":[\"24\"], \"PHONE_NUMBER\":[\"999-9999-999\"]}\n"
    "Clinical Note: \"Chief Complaint: Fall...\", PHI: "
    "{\"PERSON\":[\"Jimmy Chen\"], \"AGE\":[\"30\"], "
    "\"DATE_TIME\":[\"3/22/2023\"]}";

const std::string_view kAegUser =
    "Please generate one simulated clinical notes along with a list which "
    "contains all Protected Health Information (PHI) entities within the "
    "notes.";

const std::string_view kSpiSystem =
    "You are an assistant who helps the doctor write clinical notes.";

const std::string_view kSpiUserHead =
    "You are an assistant who helps the doctor write and annotate clinical "
    "notes. You should follow the following two steps:\n"
    "1. Please write a clinical note. THE NOTE SHOULD BE AT ABOUT 800 WORDS. "
    "Here is some information you can refer to. You MUST use the 'name', "
    "'phone', and 'address' field in PATIENT INFORMATION\n"
    "<INFORMATION>\n"
    "PATIENT INFORMATION:\n";

const std::string_view kSpiUserMiddle =
    "<END OF INFORMATION>\n"
    "\n"
    "Here is a note as an example:\n"
    "<EXAMPLE>\n";

const std::string_view kSpiUserTail =
    "\n"
    "<END OF EXAMPLE>\n"
    "\n"
    "Note that your output content should be different from the example. "
    "Please add the patient's email (The email domain name must be a real "
    "one.) and relationship in the clinical note. You can make up the "
    "doctor's name, date, patient's email and relationship. You must make up "
    "necessary information if they are used.\n"
    "\n"
    "2. After generating the note, extract all PHI entities within the note "
    "and store them in a JSON. PHI entity types include: 'PERSON', "
    "'LOCATION', 'ORGANIZATION', 'AGE', 'PHONE_NUMBER', 'EMAIL', "
    "'DATE_TIME', 'ZIP', 'PROFESSION', 'USERNAME', 'ID', 'URL'. For 'PERSON' "
    "entity type, there are two special cases:\n"
    "1. When you generate 'Dr.(Name)', you should only extract '(Name)' as a "
    "PHI element;\n"
    "2. When you generate 'Mr./Ms./Mrs.(Name)', you should take "
    "'Mr./Ms./Mrs.(Name)' as a PHI element.\n"
    "\n"
    "Here is an example of PHI:\n"
    "{ \"PERSON\": [\"Emily Turner\", \"Smith\"],\n"
    "\"AGE\": [\"28\"],\n"
    "\"ORGANIZATION\": [\"Midtown Medical Center\"],\n"
    "\"DATE_TIME\": [\"September 15th, 2023, at approximately '9:45 PM'\"],\n"
    "\"LOCATION\": [\"Central Park, New York\"],\n"
    "\"PHONE_NUMBER\": [\"555-123-4567\"]\n"
    "}\n"
    "(End of Example)\n"
    "\n"
    "Your answer format should be like this:\n"
    "Clinical note: (Your clinical note)\n"
    "PHI: (Your PHI, in JSON format)";

}  // namespace lppa::prompts
