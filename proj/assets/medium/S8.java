class S8 extends Abstract5 {
  void enter() {
    log("note");
    new S2();
  }
  void exit() {
    send("msg16");
    try {
      switch (event) {
        case EV109:
          try {
            send("msg17");
            new S21();
          } catch (IllegalStateException e) {
            send("msg4");
            new S6();
            new State();
            new S19();
          }
          break;
        case EV110:
          if (x7 > 0) {
            new S2();
            send("msg5");
            log("note");
            new S19();
          }
          if (x6 > 0) {
            new S4();
            send("msg2");
          } else {
            new S14();
            log("note");
          }
          break;
      }
      new S16();
      new S18();
      new S23();
    } catch (TimeoutException e) {
      try {
        switch (event) {
          case EV111:
            new S5();
            new S18();
            send("msg10");
            break;
          case EV112:
            new S15();
            break;
        }
        if (x6 > 0) {
          send("msg9");
          send("msg9");
        } else {
          new S6();
          send("msg16");
        }
        send("msg6");
      } catch (TimeoutException e) {
        switch (event) {
          case EV113:
            new S7();
            send("msg1");
            send("msg7");
            send("msg18");
            break;
          case EV114:
            new S23();
            break;
        }
        switch (event) {
          case EV115:
            new S8();
            new S10();
            new State();
            break;
          case EV116:
            new S15();
            send("msg8");
            new S20();
            break;
        }
        try {
          new S1();
        } catch (IOException e) {
          send("msg11");
          log("note");
          new S21();
        }
        switch (event) {
          case EV117:
            new S4();
            send("msg1");
            break;
        }
      }
      new S26();
    } catch (IllegalStateException e) {
      send("msg14");
      switch (event) {
        case EV118:
          new S10();
          new S29();
          switch (event) {
            case EV119:
              new S11();
              send("msg15");
              send("msg3");
              send("msg11");
              break;
          }
          new S26();
          break;
        case EV120:
          log("note");
          send("msg4");
          break;
        case EV121:
          new S2();
          switch (event) {
            case EV122:
              new S21();
              new S22();
              send("msg8");
              new S21();
              break;
          }
          break;
      }
      if (x4 > 0) {
        new S22();
        new S24();
      } else {
        new S18();
        try {
          log("note");
          new S26();
        } catch (IllegalStateException e) {
          new S21();
          new S25();
        }
        new S28();
      }
      switch (event) {
        case EV123:
          switch (event) {
            case EV124:
              send("msg3");
              new S1();
              log("note");
              log("note");
              break;
          }
          new S6();
          break;
        case EV125:
          switch (event) {
            case EV126:
              send("msg3");
              new S18();
              break;
            case EV127:
              send("msg17");
              send("msg8");
              log("note");
              new S4();
              break;
          }
          if (x1 > 0) {
            new S4();
            new S7();
            send("msg8");
          }
          new S14();
          break;
        case EV128:
          new State();
          new S10();
          log("note");
          new S12();
          break;
      }
    }
    if (x8 > 0) {
      switch (event) {
        case EV129:
          send("msg19");
          break;
        case EV130:
          new S28();
          switch (event) {
            case EV131:
              new State();
              send("msg8");
              send("msg18");
              break;
            case EV132:
              send("msg11");
              send("msg8");
              new S23();
              new S19();
              break;
          }
          send("msg18");
          break;
      }
      send("msg10");
    }
    switch (event) {
      case EV133:
        new S8();
        if (x6 > 0) {
          send("msg1");
          send("msg19");
        } else {
          if (x3 > 0) {
            new S20();
            new S28();
            new S24();
            send("msg7");
          }
          new S11();
          log("note");
          if (x5 > 0) {
            new S14();
            log("note");
          } else {
            send("msg0");
            new S14();
            new S17();
          }
        }
        new S11();
        break;
      case EV134:
        send("msg14");
        break;
    }
  }
  void handle() {
    if (x4 > 0) {
      if (x6 > 0) {
        new S17();
      } else {
        switch (event) {
          case EV135:
            send("msg1");
            new S29();
            break;
        }
        new S21();
        send("msg11");
      }
      new S25();
      new S17();
      switch (event) {
        case EV136:
          send("msg4");
          new S21();
          send("msg1");
          break;
      }
    } else {
      new S28();
    }
    new S18();
    new S21();
  }
  void tick() {
    try {
      new S2();
      try {
        new State();
        switch (event) {
          case EV137:
            new State();
            new Helper();
            send("msg3");
            new S15();
            break;
          case EV138:
            new S25();
            send("msg19");
            break;
        }
        new S18();
      } catch (IllegalStateException e) {
        new S6();
      } finally {
        send("msg14");
        log("note");
        new S6();
        switch (event) {
          case EV139:
            send("msg4");
            new S4();
            break;
          case EV140:
            send("msg12");
            break;
          case EV141:
            new S30();
            new State();
            send("msg8");
            new S8();
            break;
        }
      }
    } catch (IllegalStateException e) {
      log("note");
    } catch (IllegalStateException e) {
      new S16();
      new S22();
      try {
        try {
          send("msg6");
          new S13();
          new S16();
          send("msg2");
        } catch (IllegalStateException e) {
          send("msg15");
          new State();
          log("note");
        }
        send("msg10");
        try {
          new S26();
          send("msg19");
        } catch (TimeoutException e) {
          new S15();
          new S25();
          new State();
        } catch (IllegalStateException e) {
          new S29();
          send("msg5");
          send("msg16");
        }
        try {
          send("msg5");
        } catch (IOException e) {
          send("msg11");
          send("msg8");
        } catch (IllegalStateException e) {
          send("msg5");
          new S18();
          log("note");
        }
      } catch (IOException e) {
        new S21();
        new S13();
      } catch (IOException e) {
        try {
          new S2();
        } finally {
          log("note");
          send("msg4");
          send("msg5");
          send("msg8");
        }
      }
      if (x1 > 0) {
        new S12();
      }
    }
    switch (event) {
      case EV142:
        send("msg14");
        send("msg18");
        break;
      case EV143:
        if (x3 > 0) {
          send("msg19");
        } else {
          new S30();
          switch (event) {
            case EV144:
              new S29();
              break;
          }
          try {
            send("msg13");
          } catch (TimeoutException e) {
            send("msg16");
            new S27();
            send("msg19");
            send("msg8");
          } catch (TimeoutException e) {
            send("msg9");
            send("msg4");
            new S8();
            new S23();
          }
          new S16();
        }
        switch (event) {
          case EV145:
            new S2();
            if (x0 > 0) {
              log("note");
              new S22();
            } else {
              new S27();
              send("msg5");
              send("msg19");
              send("msg8");
            }
            new S27();
            log("note");
            break;
        }
        log("note");
        break;
      case EV146:
        if (x6 > 0) {
          send("msg7");
          send("msg3");
          switch (event) {
            case EV147:
              new Helper();
              new Helper();
              new S28();
              break;
            case EV148:
              send("msg5");
              log("note");
              log("note");
              break;
          }
          if (x1 > 0) {
            new S16();
            log("note");
            send("msg5");
          }
        } else {
          try {
            new S5();
            send("msg18");
            new S30();
            new State();
          } catch (TimeoutException e) {
            send("msg3");
            send("msg2");
            send("msg5");
            new S28();
          } catch (IOException e) {
            log("note");
          }
        }
        break;
    }
  }
  void reset() {
    new S5();
    new S20();
  }
}
