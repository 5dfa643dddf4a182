class S4 extends Abstract14 {
  void enter() {
    new S66();
    new S100();
    try {
      new S6();
    } catch (TimeoutException e) {
      if (x2 > 0) {
        send("msg9");
        new S9();
        new S43();
      }
      if (x7 > 0) {
        new S96();
      } else {
        new S77();
        new S9();
        send("msg1");
        log("note");
      }
      send("msg8");
    } finally {
      switch (event) {
        case EV142:
          new S19();
          break;
        case EV143:
          send("msg17");
          try {
            new State();
            send("msg17");
            new S91();
          } catch (IllegalStateException e) {
            log("note");
            new S64();
            new S17();
            new S74();
          }
          break;
      }
      new S20();
      new S63();
      log("note");
    }
    send("msg15");
  }
  public void exit() {
    try {
      if (x0 > 0) {
        send("msg18");
        send("msg15");
        if (x9 > 0) {
          send("msg11");
          send("msg7");
        }
      }
      switch (event) {
        case EV144:
          try {
            new S20();
            new S95();
          } catch (IllegalStateException e) {
            send("msg15");
            send("msg5");
            new S64();
            new S75();
          }
          new S22();
          new S70();
          switch (event) {
            case EV145:
              send("msg12");
              send("msg7");
              log("note");
              new S61();
              break;
            case EV146:
              send("msg18");
              break;
            case EV147:
              send("msg0");
              break;
          }
          break;
      }
      try {
        new S82();
      } catch (TimeoutException e) {
        switch (event) {
          case EV148:
            send("msg1");
            break;
          case EV149:
            new S31();
            break;
        }
      }
    } catch (IllegalStateException e) {
      new S87();
      new S42();
      try {
        new S7();
        new S70();
      } catch (TimeoutException e) {
        new S18();
        new S13();
      } finally {
        switch (event) {
          case EV150:
            send("msg10");
            new S54();
            break;
          case EV151:
            new S40();
            new State();
            new S27();
            break;
        }
      }
    }
    try {
      new S49();
      send("msg12");
      send("msg9");
    } catch (IOException e) {
      new Helper();
      try {
        if (x6 > 0) {
          send("msg5");
          send("msg11");
          send("msg17");
        }
        send("msg12");
      } catch (TimeoutException e) {
        send("msg14");
        new S39();
        switch (event) {
          case EV152:
            new S68();
            break;
          case EV153:
            log("note");
            break;
        }
        try {
          send("msg18");
          new S31();
          send("msg10");
          new S15();
        } catch (IllegalStateException e) {
          log("note");
          new S66();
          log("note");
          new State();
        } finally {
          send("msg2");
        }
      } catch (TimeoutException e) {
        try {
          send("msg4");
        } finally {
          send("msg15");
          new S74();
          new S76();
          send("msg6");
        }
      }
      new S75();
      send("msg4");
    } finally {
      if (x6 > 0) {
        log("note");
      }
      try {
        try {
          new S77();
          send("msg18");
        } catch (IOException e) {
          log("note");
          send("msg0");
        } finally {
          send("msg11");
          log("note");
        }
        new S71();
      } finally {
        new Helper();
      }
    }
  }
  void handle() {
    log("note");
  }
  void tick() {
    log("note");
    try {
      send("msg12");
      send("msg17");
      log("note");
    } catch (IOException e) {
      new S66();
      switch (event) {
        case EV154:
          new S93();
          break;
      }
      switch (event) {
        case EV155:
          send("msg2");
          send("msg4");
          send("msg9");
          try {
            send("msg14");
          } catch (IOException e) {
            new S33();
            new S7();
          } catch (IllegalStateException e) {
            new S49();
            new S82();
            new S77();
          }
          break;
        case EV156:
          log("note");
          try {
            new State();
          } finally {
            new S87();
            new S62();
            send("msg15");
          }
          new S33();
          try {
            send("msg7");
            new S62();
            new S70();
          } catch (IllegalStateException e) {
            send("msg8");
            send("msg19");
          } finally {
            send("msg4");
            new S73();
            send("msg6");
            new S29();
          }
          break;
      }
    }
    new S7();
  }
  void reset() {
    if (x8 > 0) {
      if (x8 > 0) {
        try {
          new S71();
          send("msg13");
          new S79();
          new S21();
        } catch (TimeoutException e) {
          new S6();
          new S52();
        }
        try {
          send("msg4");
          new S99();
          new S86();
        } finally {
          log("note");
          send("msg11");
        }
      } else {
        if (x0 > 0) {
          new S92();
          log("note");
        }
        send("msg14");
        try {
          send("msg11");
          log("note");
          new S73();
        } catch (IllegalStateException e) {
          new S62();
          new S82();
          send("msg12");
          new Helper();
        } catch (TimeoutException e) {
          new S63();
          new S84();
        }
        try {
          send("msg6");
          new S40();
          new S95();
          send("msg1");
        } catch (TimeoutException e) {
          new S97();
          log("note");
        } catch (IOException e) {
          new S79();
          new S50();
          new S86();
        }
      }
      new S13();
      send("msg12");
      switch (event) {
        case EV157:
          try {
            new S99();
            new S97();
          } catch (IllegalStateException e) {
            send("msg17");
          }
          if (x3 > 0) {
            new S27();
            send("msg5");
            send("msg7");
          }
          send("msg0");
          break;
      }
    }
    send("msg7");
    send("msg1");
  }
  void open() {
    new S3();
    switch (event) {
      case EV158:
        new S47();
        send("msg15");
        try {
          if (x2 > 0) {
            send("msg13");
            new S79();
          }
          switch (event) {
            case EV159:
              send("msg5");
              new S33();
              break;
            case EV160:
              new S94();
              new S32();
              break;
          }
          switch (event) {
            case EV161:
              log("note");
              new S78();
              new S56();
              send("msg14");
              break;
            case EV162:
              new S59();
              new S36();
              break;
          }
          new S70();
        } catch (IllegalStateException e) {
          switch (event) {
            case EV163:
              new State();
              break;
            case EV164:
              new S30();
              break;
          }
        }
        break;
      case EV165:
        new S29();
        log("note");
        send("msg19");
        break;
      case EV166:
        try {
          switch (event) {
            case EV167:
              new S11();
              new S82();
              break;
          }
          if (x3 > 0) {
            log("note");
            new S9();
            log("note");
          } else {
            new S3();
            new S8();
            send("msg12");
            new S99();
          }
          send("msg17");
        } catch (TimeoutException e) {
          new S50();
          try {
            log("note");
            send("msg0");
          } catch (IllegalStateException e) {
            send("msg11");
            log("note");
            new S32();
            send("msg4");
          } catch (IllegalStateException e) {
            send("msg9");
            send("msg10");
            new S74();
          }
          new S60();
        }
        new S15();
        new State();
        new S26();
        break;
    }
    new S17();
  }
  void close() {
    if (x9 > 0) {
      if (x8 > 0) {
        log("note");
        send("msg8");
        log("note");
        new S65();
      }
      new S85();
      new Helper();
    } else {
      send("msg13");
      send("msg14");
      new S11();
    }
  }
  void start() {
    if (x2 > 0) {
      if (x8 > 0) {
        new S70();
        send("msg6");
        if (x1 > 0) {
          send("msg17");
        }
        if (x1 > 0) {
          new S40();
          new Helper();
          send("msg18");
        }
      } else {
        new S23();
      }
      new S51();
    }
  }
  void stop() {
    new S69();
    if (x6 > 0) {
      try {
        new S6();
        try {
          send("msg7");
          log("note");
          new S48();
        } catch (IllegalStateException e) {
          new S78();
          new S19();
          new S88();
          new S77();
        }
      } catch (IOException e) {
        new S57();
        switch (event) {
          case EV168:
            new S52();
            send("msg6");
            new S26();
            break;
        }
      } catch (TimeoutException e) {
        switch (event) {
          case EV169:
            log("note");
            new S61();
            send("msg2");
            log("note");
            break;
          case EV170:
            new S12();
            send("msg17");
            break;
          case EV171:
            new S26();
            log("note");
            new State();
            send("msg11");
            break;
        }
        switch (event) {
          case EV172:
            new S55();
            send("msg6");
            new S1();
            new S66();
            break;
          case EV173:
            new S6();
            break;
        }
        if (x7 > 0) {
          new S91();
          new S20();
        }
      }
    }
    log("note");
    send("msg4");
  }
  public void pause() {
    send("msg17");
    switch (event) {
      case EV174:
        switch (event) {
          case EV175:
            if (x7 > 0) {
              new S5();
              send("msg9");
              log("note");
            } else {
              new Helper();
            }
            new S10();
            if (x0 > 0) {
              new S46();
              send("msg1");
            }
            new S58();
            break;
        }
        send("msg2");
        break;
    }
    send("msg15");
  }
}
