class S100 extends Abstract5 {
  void enter() {
    new S81();
    send("msg15");
    log("note");
    switch (event) {
      case EV3120:
        new State();
        log("note");
        new S61();
        send("msg16");
        break;
    }
  }
  void exit() {
    send("msg3");
    new S39();
    send("msg14");
    new S64();
  }
  void handle() {
    new S63();
    try {
      try {
        try {
          log("note");
          new S34();
        } catch (IOException e) {
          new S88();
        }
      } catch (IOException e) {
        send("msg12");
        send("msg2");
        send("msg4");
      }
    } catch (TimeoutException e) {
      new S89();
      log("note");
      send("msg5");
    } catch (TimeoutException e) {
      send("msg10");
      switch (event) {
        case EV3121:
          new State();
          log("note");
          new S28();
          switch (event) {
            case EV3122:
              send("msg13");
              break;
          }
          break;
      }
      new S56();
    }
    send("msg19");
  }
  public void tick() {
    switch (event) {
      case EV3123:
        log("note");
        try {
          try {
            new S58();
            log("note");
            log("note");
          } catch (IOException e) {
            new S46();
          } finally {
            new S49();
            new S40();
            new S59();
            send("msg1");
          }
          send("msg5");
          try {
            send("msg3");
          } catch (IllegalStateException e) {
            send("msg2");
            send("msg8");
            send("msg14");
          } catch (IllegalStateException e) {
            log("note");
            new S25();
            new S22();
          }
          new S95();
        } catch (IllegalStateException e) {
          switch (event) {
            case EV3124:
              new S19();
              new S87();
              break;
            case EV3125:
              send("msg0");
              break;
            case EV3126:
              new S89();
              send("msg17");
              new S36();
              new S25();
              break;
          }
          send("msg3");
        } catch (TimeoutException e) {
          switch (event) {
            case EV3127:
              new S38();
              send("msg13");
              new S8();
              break;
          }
          try {
            log("note");
          } finally {
            new S100();
            new S32();
            new S85();
          }
          if (x0 > 0) {
            send("msg3");
            new S46();
            new S91();
            new State();
          }
          try {
            new S17();
            send("msg4");
            new S63();
          } catch (IllegalStateException e) {
            send("msg5");
            new State();
            send("msg2");
            new S87();
          } finally {
            new S92();
            new S59();
            new S56();
            new S86();
          }
        }
        if (x9 > 0) {
          new Helper();
          if (x0 > 0) {
            new S77();
            send("msg17");
            new S33();
            new S31();
          } else {
            new S25();
            new S29();
            send("msg2");
          }
          send("msg18");
        } else {
          new S27();
          new S36();
        }
        break;
      case EV3128:
        new S93();
        send("msg2");
        new S72();
        break;
    }
    new State();
    send("msg14");
    if (x5 > 0) {
      try {
        send("msg8");
        send("msg17");
      } catch (IOException e) {
        try {
          send("msg9");
          new S76();
          new S17();
        } catch (IOException e) {
          log("note");
          log("note");
        } catch (IllegalStateException e) {
          new Helper();
          send("msg8");
          send("msg2");
        }
        if (x4 > 0) {
          send("msg12");
          new S3();
          new S54();
        } else {
          log("note");
          send("msg15");
          new S56();
        }
        new S9();
      } catch (TimeoutException e) {
        new S13();
      }
      new S99();
      send("msg11");
      try {
        send("msg4");
      } finally {
        new S66();
        switch (event) {
          case EV3129:
            new S24();
            new S61();
            new S66();
            break;
        }
        switch (event) {
          case EV3130:
            send("msg19");
            new S67();
            send("msg3");
            break;
          case EV3131:
            new S72();
            new S15();
            log("note");
            new S32();
            break;
          case EV3132:
            log("note");
            new S95();
            new S1();
            break;
        }
      }
    }
  }
  void reset() {
    switch (event) {
      case EV3133:
        log("note");
        send("msg2");
        send("msg15");
        break;
      case EV3134:
        new S44();
        break;
      case EV3135:
        switch (event) {
          case EV3136:
            new S9();
            break;
        }
        switch (event) {
          case EV3137:
            new S2();
            send("msg7");
            send("msg3");
            break;
          case EV3138:
            send("msg11");
            break;
          case EV3139:
            new S48();
            break;
        }
        new S96();
        if (x0 > 0) {
          log("note");
          send("msg5");
          send("msg9");
        }
        break;
    }
  }
  void open() {
    new S86();
    send("msg7");
  }
  public void close() {
    send("msg12");
    new S60();
    try {
      try {
        new S45();
      } finally {
        new S55();
        new S61();
      }
    } catch (IOException e) {
      new S17();
      if (x0 > 0) {
        send("msg15");
        switch (event) {
          case EV3140:
            send("msg5");
            send("msg9");
            new S6();
            break;
          case EV3141:
            new State();
            new S51();
            send("msg7");
            send("msg4");
            break;
          case EV3142:
            send("msg0");
            new S61();
            break;
        }
        send("msg5");
      } else {
        send("msg11");
        switch (event) {
          case EV3143:
            new S70();
            log("note");
            new S57();
            break;
          case EV3144:
            send("msg0");
            new S17();
            new S11();
            send("msg0");
            break;
          case EV3145:
            new S17();
            new S57();
            send("msg7");
            break;
        }
        if (x4 > 0) {
          send("msg10");
          log("note");
          send("msg7");
          new S84();
        } else {
          new S51();
          new State();
          send("msg11");
        }
        new S25();
      }
      new S76();
      if (x1 > 0) {
        switch (event) {
          case EV3146:
            new State();
            break;
          case EV3147:
            send("msg11");
            new S77();
            break;
          case EV3148:
            new S77();
            new S33();
            send("msg15");
            send("msg7");
            break;
        }
        if (x0 > 0) {
          send("msg15");
          new State();
          log("note");
        }
        send("msg0");
      }
    } catch (IOException e) {
      new S7();
    }
  }
  void start() {
    switch (event) {
      case EV3149:
        switch (event) {
          case EV3150:
            new S22();
            send("msg15");
            break;
          case EV3151:
            switch (event) {
              case EV3152:
                new S73();
                new Helper();
                new S74();
                break;
              case EV3153:
                send("msg1");
                break;
              case EV3154:
                send("msg16");
                send("msg14");
                break;
            }
            send("msg10");
            new S50();
            try {
              send("msg14");
              send("msg0");
              new S14();
            } catch (IOException e) {
              new S63();
              send("msg9");
            } catch (TimeoutException e) {
              log("note");
              new S24();
              new S71();
            }
            break;
        }
        if (x7 > 0) {
          new S51();
          switch (event) {
            case EV3155:
              new S63();
              send("msg1");
              break;
          }
          new S47();
        } else {
          new S81();
          switch (event) {
            case EV3156:
              log("note");
              new Helper();
              send("msg17");
              break;
            case EV3157:
              send("msg2");
              send("msg15");
              break;
            case EV3158:
              new S32();
              new S12();
              break;
          }
        }
        break;
    }
    new S85();
  }
  public void stop() {
    new S5();
    try {
      try {
        new S91();
      } finally {
        new S69();
      }
      new S43();
      try {
        new S42();
      } finally {
        new S94();
        if (x7 > 0) {
          send("msg16");
          new S5();
        }
      }
      new S85();
    } catch (IllegalStateException e) {
      try {
        send("msg5");
        if (x6 > 0) {
          log("note");
          new S48();
        } else {
          new State();
          new State();
          new S35();
          send("msg15");
        }
      } catch (IOException e) {
        new S82();
        try {
          log("note");
        } catch (IOException e) {
          send("msg3");
        } catch (TimeoutException e) {
          new S48();
        }
        new S73();
      } finally {
        try {
          new S43();
          new S86();
          log("note");
          send("msg15");
        } catch (TimeoutException e) {
          log("note");
          send("msg14");
          new S62();
          new S18();
        } finally {
          send("msg12");
          send("msg1");
          new S9();
        }
        new S12();
      }
      try {
        new S45();
      } catch (IOException e) {
        send("msg17");
      } finally {
        send("msg5");
        try {
          send("msg14");
          new S46();
        } finally {
          new S51();
        }
      }
    } catch (IllegalStateException e) {
      if (x1 > 0) {
        if (x7 > 0) {
          send("msg2");
        }
        send("msg10");
        if (x3 > 0) {
          log("note");
        }
      } else {
        new S78();
        if (x6 > 0) {
          send("msg2");
          log("note");
          new S36();
          new S83();
        } else {
          new S68();
          new S26();
          send("msg14");
          new S15();
        }
        new S19();
      }
      new S5();
      new S4();
      send("msg8");
    }
    new S99();
  }
  void pause() {
    if (x1 > 0) {
      send("msg13");
      if (x4 > 0) {
        switch (event) {
          case EV3159:
            send("msg19");
            new S27();
            new S55();
            send("msg7");
            break;
        }
        send("msg9");
        send("msg10");
      } else {
        new S29();
        log("note");
        try {
          new S38();
          send("msg8");
          log("note");
        } catch (TimeoutException e) {
          send("msg11");
          new S80();
        } finally {
          log("note");
          log("note");
          new S48();
        }
      }
      send("msg1");
      new S85();
    } else {
      switch (event) {
        case EV3160:
          if (x4 > 0) {
            new S6();
          } else {
            log("note");
          }
          send("msg3");
          send("msg1");
          switch (event) {
            case EV3161:
              new S28();
              break;
          }
          break;
        case EV3162:
          new S45();
          switch (event) {
            case EV3163:
              new S95();
              send("msg19");
              send("msg12");
              break;
            case EV3164:
              new S70();
              new S65();
              new S31();
              log("note");
              break;
          }
          send("msg13");
          send("msg16");
          break;
        case EV3165:
          send("msg6");
          try {
            send("msg18");
            new S64();
            log("note");
            send("msg2");
          } finally {
            new S11();
          }
          new S89();
          break;
      }
      if (x0 > 0) {
        log("note");
        send("msg15");
        send("msg9");
        try {
          new S1();
          new S4();
          new S84();
        } catch (IllegalStateException e) {
          new S83();
          send("msg2");
          send("msg3");
        } finally {
          send("msg7");
          send("msg15");
          send("msg11");
        }
      }
    }
    if (x1 > 0) {
      try {
        new S41();
      } catch (IOException e) {
        try {
          new Helper();
          new S41();
          new S94();
          new S59();
        } catch (IOException e) {
          new S16();
          new S7();
          new S7();
          new S49();
        } finally {
          new S37();
          send("msg13");
          new S63();
        }
        new S30();
      } catch (IOException e) {
        try {
          log("note");
          new State();
        } finally {
          new S46();
        }
        try {
          send("msg16");
          send("msg19");
        } catch (IOException e) {
          log("note");
          new S18();
          new S48();
        } catch (IllegalStateException e) {
          send("msg18");
          send("msg14");
          new S72();
        }
        if (x2 > 0) {
          new S71();
        } else {
          new S81();
          new S26();
          new S12();
        }
      }
      if (x3 > 0) {
        log("note");
        switch (event) {
          case EV3166:
            send("msg4");
            break;
          case EV3167:
            new S1();
            new S18();
            new S85();
            new S85();
            break;
        }
      }
      send("msg9");
    }
    new S19();
    send("msg10");
  }
}
