// Frozen template-bank JSON for the default scenario, embedded so the CLI
// works with no data files on disk. Must stay byte-identical to
// bank_text_for(default_scenario()); a test guards the equality.
#pragma once

namespace phatic {

inline const char* builtin_bank_text() {
    // The + 1 skips the newline that follows the raw-string open paren.
    return 1 + R"BANK(
{
  "context_guidelines": [
    "Good places to start a conversation: waiting in line, a club meeting, on the bus.",
    "Openers work best somewhere casual where neither person is in a hurry."
  ],
  "format": "bank-v1",
  "rules": {
    "annoyed_by_unfair_participation": {
      "guidelines": [
        "Pay attention to how much you are talking; conversations work best when both people get a turn.",
        "People will back away from a conversation if it is one-sided."
      ],
      "silent": true,
      "utterances": []
    },
    "ask_question_baseball": {
      "guidelines": [
        "Avoid only asking questions and never giving information about yourself; this makes the conversation one-sided.",
        "Asking a question shows you are interested in the other person."
      ],
      "silent": false,
      "utterances": [
        "What do you think about {topic}, {addressee}?",
        "How do you feel about {topic}?"
      ]
    },
    "ask_question_pop": {
      "guidelines": [
        "Avoid only asking questions and never giving information about yourself; this makes the conversation one-sided.",
        "Asking a question shows you are interested in the other person."
      ],
      "silent": false,
      "utterances": [
        "What do you think about {topic}, {addressee}?",
        "How do you feel about {topic}?"
      ]
    },
    "ask_question_rock": {
      "guidelines": [
        "Avoid only asking questions and never giving information about yourself; this makes the conversation one-sided.",
        "Asking a question shows you are interested in the other person."
      ],
      "silent": false,
      "utterances": [
        "What do you think about {topic}, {addressee}?",
        "How do you feel about {topic}?"
      ]
    },
    "ask_question_soccer": {
      "guidelines": [
        "Avoid only asking questions and never giving information about yourself; this makes the conversation one-sided.",
        "Asking a question shows you are interested in the other person."
      ],
      "silent": false,
      "utterances": [
        "What do you think about {topic}, {addressee}?",
        "How do you feel about {topic}?"
      ]
    },
    "change_topic_baseball_running": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_baseball_soccer": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_baseball_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_baseball_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_country_pop": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_country_rock": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_country_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_country_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_pop_country": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_pop_rock": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_pop_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_pop_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_rock_country": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_rock_pop": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_rock_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_rock_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_running_baseball": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_running_soccer": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_running_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_running_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_soccer_baseball": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_soccer_running": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_soccer_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_soccer_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_baseball": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "I did a lot of playing baseball on Saturday It was nice out, just like today.",
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_country": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_pop": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_rock": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_running": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_soccer": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weather_weekend": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_baseball": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_country": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_pop": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_rock": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_running": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_soccer": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "change_topic_weekend_weather": {
      "guidelines": [
        "Moving to a related topic keeps the conversation flowing naturally.",
        "Linking a new subject to the current one makes the shift feel smooth."
      ],
      "silent": false,
      "utterances": [
        "Speaking of {topic}...",
        "That actually reminds me of {topic}."
      ]
    },
    "continue_talking_baseball": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_country": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_pop": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_rock": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_running": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_soccer": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_weather": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "continue_talking_weekend": {
      "guidelines": [
        "Staying on a topic is fine, but watch that you are not the only one talking.",
        "If you keep the floor too long, the conversation becomes one-sided."
      ],
      "silent": false,
      "utterances": [
        "Some of the people I know like {topic}.",
        "There's just so much to say about {topic}."
      ]
    },
    "dislike_from_disagreement_negative": {
      "guidelines": [
        "Voicing strong dislikes can put people off; keep disagreement gentle."
      ],
      "silent": true,
      "utterances": []
    },
    "dislike_from_disagreement_positive": {
      "guidelines": [
        "Voicing strong dislikes can put people off; keep disagreement gentle."
      ],
      "silent": true,
      "utterances": []
    },
    "greet_alice_bob": {
      "guidelines": [
        "Greeting someone acknowledges them and lets them know you are open to conversation.",
        "A greeting is an easy way to show someone you noticed them."
      ],
      "silent": false,
      "utterances": [
        "Good morning, {addressee}!",
        "Hey, {addressee}! Good to see you."
      ]
    },
    "greet_bob_alice": {
      "guidelines": [
        "Greeting someone acknowledges them and lets them know you are open to conversation.",
        "A greeting is an easy way to show someone you noticed them."
      ],
      "silent": false,
      "utterances": [
        "Good morning, {addressee}!",
        "Hey, {addressee}! Good to see you."
      ]
    },
    "happy_from_enthusiastic_agreement": {
      "guidelines": [
        "Shared enthusiasm over a topic strengthens a connection."
      ],
      "silent": true,
      "utterances": []
    },
    "initiate_goodbye_alice_bob": {
      "guidelines": [
        "Winding a conversation down politely leaves a good impression.",
        "Signaling the end before leaving is kinder than just walking away."
      ],
      "silent": false,
      "utterances": [
        "Well, I should get going.",
        "Anyway, I ought to head out."
      ]
    },
    "initiate_goodbye_bob_alice": {
      "guidelines": [
        "Winding a conversation down politely leaves a good impression.",
        "Signaling the end before leaving is kinder than just walking away."
      ],
      "silent": false,
      "utterances": [
        "Well, I should get going.",
        "Anyway, I ought to head out."
      ]
    },
    "like_from_agreement": {
      "guidelines": [
        "Finding common ground builds rapport."
      ],
      "silent": true,
      "utterances": []
    },
    "reciprocate_question_baseball": {
      "guidelines": [
        "Answering a question and sharing your view rewards the other person's interest.",
        "Reciprocating keeps the exchange of information balanced."
      ],
      "silent": false,
      "utterances": [
        "Well, since you ask, I have plenty of thoughts on {topic}.",
        "Glad you asked, {addressee}! Let me tell you where I stand on {topic}."
      ]
    },
    "reciprocate_question_pop": {
      "guidelines": [
        "Answering a question and sharing your view rewards the other person's interest.",
        "Reciprocating keeps the exchange of information balanced."
      ],
      "silent": false,
      "utterances": [
        "Well, since you ask, I have plenty of thoughts on {topic}.",
        "Glad you asked, {addressee}! Let me tell you where I stand on {topic}."
      ]
    },
    "reciprocate_question_rock": {
      "guidelines": [
        "Answering a question and sharing your view rewards the other person's interest.",
        "Reciprocating keeps the exchange of information balanced."
      ],
      "silent": false,
      "utterances": [
        "Well, since you ask, I have plenty of thoughts on {topic}.",
        "Glad you asked, {addressee}! Let me tell you where I stand on {topic}."
      ]
    },
    "reciprocate_question_soccer": {
      "guidelines": [
        "Answering a question and sharing your view rewards the other person's interest.",
        "Reciprocating keeps the exchange of information balanced."
      ],
      "silent": false,
      "utterances": [
        "Well, since you ask, I have plenty of thoughts on {topic}.",
        "Glad you asked, {addressee}! Let me tell you where I stand on {topic}."
      ]
    },
    "say_goodbye_alice_bob": {
      "guidelines": [
        "A short farewell closes the conversation on good terms.",
        "Returning a goodbye acknowledges the other person one last time."
      ],
      "silent": false,
      "utterances": [
        "Take care.",
        "See you around, {addressee}!"
      ]
    },
    "say_goodbye_bob_alice": {
      "guidelines": [
        "A short farewell closes the conversation on good terms.",
        "Returning a goodbye acknowledges the other person one last time."
      ],
      "silent": false,
      "utterances": [
        "Take care.",
        "See you around, {addressee}!"
      ]
    },
    "small_talk_weather": {
      "guidelines": [
        "Small talk makes people more comfortable around each other.",
        "Light topics give both people an easy way into a conversation."
      ],
      "silent": false,
      "utterances": [
        "This weather today is really nice--good for playing sports",
        "So, how about this {topic}?",
        "Nothing beats a little chat about the {topic}."
      ]
    },
    "small_talk_weekend": {
      "guidelines": [
        "Small talk makes people more comfortable around each other.",
        "Light topics give both people an easy way into a conversation."
      ],
      "silent": false,
      "utterances": [
        "I love time at home listening to my music. Wish the weekend didn't go by so quickly",
        "So, how about this {topic}?",
        "Nothing beats a little chat about the {topic}."
      ]
    },
    "terminate_conversation": {
      "guidelines": [
        "If a conversation feels uncomfortable, it is okay to excuse yourself and leave politely.",
        "You can end a conversation that is not working; a brief goodbye still softens the exit."
      ],
      "silent": false,
      "utterances": [
        "Uh-huh, well...I have to go now. Goodbye.",
        "You know what, I really have to run. Bye."
      ]
    },
    "topic_talk_baseball_enthusiastic_negative": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "Ugh, I really can't stand {topic}!",
        "Honestly, I think {topic} is just awful!"
      ]
    },
    "topic_talk_baseball_enthusiastic_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I absolutely love {topic}! I could talk about it all day.",
        "Oh, {topic} is the best! Nothing else comes close."
      ]
    },
    "topic_talk_baseball_typical_negative": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I have to say {topic} never really won me over.",
        "Honestly, {topic} is not really my thing."
      ]
    },
    "topic_talk_baseball_typical_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I think {topic} is a lot more interesting than people give it credit for.",
        "I quite like {topic}, honestly."
      ]
    },
    "topic_talk_pop_enthusiastic_negative": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "Ugh, I really can't stand {topic}!",
        "Honestly, I think {topic} is just awful!"
      ]
    },
    "topic_talk_pop_enthusiastic_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I absolutely love {topic}! I could talk about it all day.",
        "Oh, {topic} is the best! Nothing else comes close."
      ]
    },
    "topic_talk_pop_typical_negative": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I have to say {topic} never really won me over.",
        "Honestly, {topic} is not really my thing."
      ]
    },
    "topic_talk_pop_typical_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I think {topic} is a lot more interesting than people give it credit for.",
        "I quite like {topic}, honestly."
      ]
    },
    "topic_talk_rock_enthusiastic_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I absolutely love {topic}! I could talk about it all day.",
        "Oh, {topic} is the best! Nothing else comes close."
      ]
    },
    "topic_talk_rock_typical_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I think {topic} is a lot more interesting than people give it credit for.",
        "I quite like {topic}, honestly."
      ]
    },
    "topic_talk_soccer_enthusiastic_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I absolutely love {topic}! I could talk about it all day.",
        "Oh, {topic} is the best! Nothing else comes close."
      ]
    },
    "topic_talk_soccer_typical_positive": {
      "guidelines": [
        "Sharing an opinion of your own gives the other person something to respond to.",
        "Offering information about yourself keeps the exchange balanced."
      ],
      "silent": false,
      "utterances": [
        "I think {topic} is a lot more interesting than people give it credit for.",
        "I quite like {topic}, honestly."
      ]
    }
  }
}
)BANK";
}

}  // namespace phatic
